#include "expmart/algebra/text_format.hpp"

#include <array>
#include <charconv>
#include <sstream>

#include "expmart/errors.hpp"

namespace expmart::algebra {

std::string format_double(double v) {
  std::array<char, 32> buf{};
  auto [ptr, ec] = std::to_chars(buf.data(), buf.data() + buf.size(), v);
  if (ec != std::errc{}) throw InvalidInput("cannot format number");
  return std::string(buf.data(), ptr);
}

std::string to_text(const Element& f) {
  std::string out;
  for (const auto& term : f.monomial_terms()) {
    out += format_double(term.exponent.real());
    out += ' ';
    out += format_double(term.exponent.imag());
    for (const auto& a : term.poly) {
      out += ' ';
      out += format_double(a.real());
      out += ' ';
      out += format_double(a.imag());
    }
    out += '\n';
  }
  return out;
}

namespace {

double parse_number(std::string_view token) {
  double v = 0.0;
  auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), v);
  if (ec != std::errc{} || ptr != token.data() + token.size()) {
    throw InvalidInput("malformed number in element text: '" + std::string(token) + "'");
  }
  return v;
}

}  // namespace

std::vector<Element::MonomialTerm> parse_monomial_terms(std::string_view text) {
  std::vector<Element::MonomialTerm> terms;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t end = text.find_first_of("\n;", pos);
    if (end == std::string_view::npos) end = text.size();
    const std::string line(text.substr(pos, end - pos));
    pos = end + 1;

    std::istringstream is(line);
    std::vector<double> values;
    std::string token;
    while (is >> token) values.push_back(parse_number(token));
    if (values.empty()) continue;
    if (values.size() < 4 || values.size() % 2 != 0) {
      throw InvalidInput("element line needs an exponent and at least one complex coefficient: '" +
                         line + "'");
    }
    Element::MonomialTerm term{{values[0], values[1]}, {}};
    for (std::size_t i = 2; i < values.size(); i += 2) term.poly.emplace_back(values[i], values[i + 1]);
    terms.push_back(std::move(term));
  }
  return terms;
}

Element parse_element(std::string_view text, Variance q) {
  return Element::from_monomial_terms(parse_monomial_terms(text), q);
}

}  // namespace expmart::algebra
