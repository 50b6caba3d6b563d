#include "dlcat/polyform.hpp"

#include <numeric>

namespace dlc::poly {

MultiIndex::MultiIndex(std::vector<unsigned> exps)
    : exps_(std::move(exps)), degree_(std::accumulate(exps_.begin(), exps_.end(), 0U)) {}

MultiIndex MultiIndex::unit(std::size_t arity, std::size_t i) {
  if (i >= arity) throw ArityMismatch("MultiIndex::unit", arity, i + 1);
  MultiIndex m(arity);
  m.set(i, 1);
  return m;
}

void MultiIndex::set(std::size_t i, unsigned e) {
  degree_ = degree_ - exps_.at(i) + e;
  exps_[i] = e;
}

MultiIndex MultiIndex::operator+(const MultiIndex& o) const {
  if (o.arity() != arity()) throw ArityMismatch("MultiIndex +", arity(), o.arity());
  MultiIndex out = *this;
  for (std::size_t i = 0; i < exps_.size(); ++i) out.exps_[i] += o.exps_[i];
  out.degree_ += o.degree_;
  return out;
}

MultiIndex MultiIndex::join(const MultiIndex& o) const {
  std::vector<unsigned> e = exps_;
  e.insert(e.end(), o.exps_.begin(), o.exps_.end());
  return MultiIndex(std::move(e));
}

MultiIndex MultiIndex::slice(std::size_t from, std::size_t to) const {
  return MultiIndex(std::vector<unsigned>(exps_.begin() + static_cast<std::ptrdiff_t>(from),
                                          exps_.begin() + static_cast<std::ptrdiff_t>(to)));
}

MultiIndex MultiIndex::erase(std::size_t i) const {
  std::vector<unsigned> e = exps_;
  e.erase(e.begin() + static_cast<std::ptrdiff_t>(i));
  return MultiIndex(std::move(e));
}

std::vector<std::string> default_names(std::size_t arity) {
  static const char* const short_names[] = {"x", "y", "z", "w"};
  std::vector<std::string> names;
  for (std::size_t i = 0; i < arity; ++i)
    names.push_back(arity <= 4 ? std::string(short_names[i]) : "x" + std::to_string(i + 1));
  return names;
}

std::string render_monomial(const MultiIndex& m, const std::vector<std::string>& names) {
  std::string out;
  for (std::size_t i = 0; i < m.arity(); ++i) {
    if (m[i] == 0) continue;
    if (!out.empty()) out += "*";
    out += names.at(i);
    if (m[i] > 1) out += "^" + std::to_string(m[i]);
  }
  return out.empty() ? "1" : out;
}

std::string join_terms(const std::vector<std::string>& terms) {
  if (terms.empty()) return "0";
  std::string out = terms.front();
  for (std::size_t i = 1; i < terms.size(); ++i) {
    const auto& t = terms[i];
    if (!t.empty() && t.front() == '-')
      out += " - " + t.substr(1);
    else
      out += " + " + t;
  }
  return out;
}

template class Polynomial<NonNegRational>;
template class Polynomial<Rational>;
template class Polynomial<Boolean>;
template class Polynomial<Natural>;

}  // namespace dlc::poly
