#include "bidisk/symbol.hpp"

#include <algorithm>
#include <sstream>

#include "bidisk/errors.hpp"

namespace bidisk {

HomogeneousSymbol::HomogeneousSymbol(std::vector<Rational> coeffs)
    : coeffs_(std::move(coeffs)) {
  if (coeffs_.empty()) throw domain_error("symbol needs at least one coefficient");
  bool all_zero = std::all_of(coeffs_.begin(), coeffs_.end(),
                              [](const Rational& c) { return c.is_zero(); });
  if (all_zero) throw domain_error("zero symbol is inadmissible (singular Gram matrix)");
}

HomogeneousSymbol HomogeneousSymbol::parse(std::string_view text) {
  std::vector<Rational> coeffs;
  std::string field;
  std::istringstream in{std::string(text)};
  while (std::getline(in, field, ',')) {
    auto begin = field.find_first_not_of(" \t");
    auto end = field.find_last_not_of(" \t");
    if (begin == std::string::npos) throw domain_error("empty coefficient in symbol: " + std::string(text));
    coeffs.push_back(Rational::from_string(field.substr(begin, end - begin + 1)));
  }
  return HomogeneousSymbol(std::move(coeffs));
}

bool HomogeneousSymbol::is_monomial() const {
  int nonzero = 0;
  for (const auto& c : coeffs_)
    if (!c.is_zero()) ++nonzero;
  return nonzero == 1;
}

std::string HomogeneousSymbol::to_string() const {
  std::string out;
  for (std::size_t j = 0; j < coeffs_.size(); ++j) {
    if (j) out += ',';
    out += coeffs_[j].to_string();
  }
  return out;
}

HomogeneousSymbol symbol_for(Submodule s) {
  if (s == Submodule::zw) return HomogeneousSymbol({Rational(-1), Rational(1)});
  return HomogeneousSymbol({Rational(1), Rational(-2), Rational(1)});
}

Rational autocorrelation(const HomogeneousSymbol& p, long m) {
  const auto& c = p.coefficients();
  const long k = static_cast<long>(p.degree());
  long mm = m < 0 ? -m : m;
  Rational acc(0);
  for (long i = 0; i + mm <= k; ++i) acc += c[static_cast<std::size_t>(i + mm)] * c[static_cast<std::size_t>(i)];
  return acc;
}

AutocorrelationSeq AutocorrelationSeq::of(const HomogeneousSymbol& p) {
  AutocorrelationSeq seq;
  seq.a.reserve(p.degree() + 1);
  for (long m = 0; m <= static_cast<long>(p.degree()); ++m)
    seq.a.push_back(autocorrelation(p, m));
  return seq;
}

RationalMatrix ToeplitzGram::dense() const {
  RationalMatrix m(n + 1, n + 1);
  for (unsigned i = 0; i <= n; ++i)
    for (unsigned j = 0; j <= n; ++j) m.at(i, j) = entry(i, j);
  return m;
}

ToeplitzGram gram_matrix(const HomogeneousSymbol& p, unsigned n) {
  return ToeplitzGram{n, AutocorrelationSeq::of(p)};
}

}  // namespace bidisk
