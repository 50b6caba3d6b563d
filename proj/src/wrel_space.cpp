#include "dlcat/wrel_space.hpp"

#include <numeric>
#include <set>

namespace dlc::rel {

BaseSet::BaseSet(std::vector<std::string> atoms) : atoms_(std::move(atoms)) {
  std::set<std::string> seen(atoms_.begin(), atoms_.end());
  if (seen.size() != atoms_.size()) throw std::invalid_argument("BaseSet: atoms must be distinct");
}

BaseSet BaseSet::letters(std::size_t n) {
  std::vector<std::string> atoms;
  for (std::size_t i = 0; i < n; ++i) {
    atoms.push_back(i < 26 ? std::string(1, static_cast<char>('a' + i)) : "a" + std::to_string(i));
  }
  return BaseSet(std::move(atoms));
}

BaseSet BaseSet::unit() { return BaseSet({"*"}); }

BaseSet BaseSet::disjoint_union(const BaseSet& x, const BaseSet& y) {
  std::vector<std::string> atoms = x.atoms_;
  std::set<std::string> taken(atoms.begin(), atoms.end());
  for (const auto& a : y.atoms_) {
    std::string name = a;
    while (taken.count(name)) name += "'";
    taken.insert(name);
    atoms.push_back(name);
  }
  return BaseSet(std::move(atoms));
}

Bag::Bag(std::vector<unsigned> counts)
    : counts_(std::move(counts)), size_(std::accumulate(counts_.begin(), counts_.end(), 0U)) {}

Bag Bag::singleton(std::size_t base_size, std::size_t atom) { return Bag(base_size).plus(atom); }

Bag Bag::plus(std::size_t atom) const {
  Bag out = *this;
  ++out.counts_.at(atom);
  ++out.size_;
  return out;
}

Bag Bag::operator+(const Bag& o) const {
  if (o.base_size() != base_size()) throw SpaceMismatch("Bag +: different base sets");
  Bag out = *this;
  for (std::size_t i = 0; i < counts_.size(); ++i) out.counts_[i] += o.counts_[i];
  out.size_ += o.size_;
  return out;
}

std::vector<std::size_t> Bag::elements() const {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < counts_.size(); ++i) out.insert(out.end(), counts_[i], i);
  return out;
}

std::strong_ordering operator<=>(const Bag& a, const Bag& b) {
  if (auto c = a.size_ <=> b.size_; c != 0) return c;
  return b.counts_ <=> a.counts_;
}

std::string Bag::render(const BaseSet& base) const {
  std::string out = "[";
  bool first = true;
  for (std::size_t i : elements()) {
    if (!first) out += ",";
    out += base[i];
    first = false;
  }
  return out + "]";
}

// --- Factor ------------------------------------------------------------------

namespace {

// All count vectors of length n summing to total, descending lexicographic.
void compositions(std::size_t n, unsigned total, std::vector<unsigned>& cur, std::vector<Bag>& out) {
  const std::size_t pos = cur.size();
  if (pos + 1 == n) {
    cur.push_back(total);
    out.emplace_back(cur);
    cur.pop_back();
    return;
  }
  for (unsigned k = total + 1; k-- > 0;) {
    cur.push_back(k);
    compositions(n, total - k, cur, out);
    cur.pop_back();
  }
}

}  // namespace

Factor Factor::atoms(const BaseSet& base) {
  auto d = std::make_shared<Data>();
  d->kind = Kind::atoms;
  d->base = base;
  return Factor(std::move(d));
}

Factor Factor::bags(const BaseSet& base, unsigned max_size) {
  auto d = std::make_shared<Data>();
  d->kind = Kind::bags;
  d->base = base;
  d->max_size = max_size;
  if (base.size() == 0) {
    d->bags.emplace_back(0);  // only the empty bag
  } else {
    for (unsigned n = 0; n <= max_size; ++n) {
      std::vector<unsigned> cur;
      compositions(base.size(), n, cur, d->bags);
    }
  }
  for (std::size_t i = 0; i < d->bags.size(); ++i) d->index.emplace(d->bags[i], i);
  return Factor(std::move(d));
}

std::size_t Factor::size() const noexcept {
  return data_->kind == Kind::atoms ? data_->base.size() : data_->bags.size();
}

std::size_t Factor::index_of(const Bag& b) const {
  auto it = data_->index.find(b);
  if (it == data_->index.end()) throw SpaceMismatch("bag " + b.render(data_->base) + " outside " + describe());
  return it->second;
}

bool Factor::contains(const Bag& b) const { return data_->index.count(b) != 0; }

std::string Factor::render_point(std::size_t index) const {
  if (kind() == Kind::atoms) return base()[index];
  return bag(index).render(base());
}

std::string Factor::describe() const {
  std::string set = "{";
  for (std::size_t i = 0; i < base().size(); ++i) set += (i ? "," : "") + base()[i];
  set += "}";
  if (kind() == Kind::atoms) return set;
  return "!" + set + "<=" + std::to_string(max_size());
}

bool operator==(const Factor& a, const Factor& b) {
  if (a.data_ == b.data_) return true;
  return a.kind() == b.kind() && a.base() == b.base() && a.max_size() == b.max_size();
}

// --- IndexSpace --------------------------------------------------------------

IndexSpace::IndexSpace(std::vector<Factor> factors) : factors_(std::move(factors)) {
  radix_.assign(factors_.size(), 1);
  size_ = 1;
  for (std::size_t i = factors_.size(); i-- > 0;) {
    radix_[i] = size_;
    size_ *= factors_[i].size();
  }
}

std::vector<std::size_t> IndexSpace::coords(std::size_t point) const {
  std::vector<std::size_t> out(factors_.size());
  for (std::size_t i = 0; i < factors_.size(); ++i) {
    out[i] = point / radix_[i];
    point %= radix_[i];
  }
  return out;
}

std::size_t IndexSpace::point(const std::vector<std::size_t>& coords) const {
  if (coords.size() != factors_.size()) throw SpaceMismatch("IndexSpace::point: wrong coordinate count");
  std::size_t p = 0;
  for (std::size_t i = 0; i < coords.size(); ++i) p += coords[i] * radix_[i];
  return p;
}

IndexSpace IndexSpace::strictify() const {
  std::vector<Factor> kept;
  for (const auto& f : factors_)
    if (!(f.kind() == Factor::Kind::atoms && f.size() == 1)) kept.push_back(f);
  return IndexSpace(std::move(kept));
}

std::string IndexSpace::render_point(std::size_t point) const {
  if (factors_.empty()) return "*";
  const auto c = coords(point);
  if (factors_.size() == 1) return factors_[0].render_point(c[0]);
  std::string out = "(";
  for (std::size_t i = 0; i < c.size(); ++i) out += (i ? "," : "") + factors_[i].render_point(c[i]);
  return out + ")";
}

std::string IndexSpace::describe() const {
  if (factors_.empty()) return "I";
  std::string out;
  for (std::size_t i = 0; i < factors_.size(); ++i) out += (i ? " x " : "") + factors_[i].describe();
  return out;
}

IndexSpace operator*(const IndexSpace& a, const IndexSpace& b) {
  std::vector<Factor> f = a.factors_;
  f.insert(f.end(), b.factors_.begin(), b.factors_.end());
  return IndexSpace(std::move(f));
}

// --- band --------------------------------------------------------------------

Truncation::Truncation(unsigned d, unsigned m) : D(d), margin(m) {
  if (margin < 2) throw std::invalid_argument("Truncation: margin must be at least 2");
}

unsigned total_bag_size(const IndexSpace& space, std::size_t point) {
  const auto c = space.coords(point);
  unsigned total = 0;
  for (std::size_t i = 0; i < c.size(); ++i)
    if (space.factors()[i].kind() == Factor::Kind::bags) total += space.factors()[i].bag(c[i]).size();
  return total;
}

bool in_band(const IndexSpace& space, std::size_t point, const Truncation& t, BandRule rule) {
  const unsigned limit = t.safe_size();
  if (rule == BandRule::total) return total_bag_size(space, point) <= limit;
  const auto c = space.coords(point);
  for (std::size_t i = 0; i < c.size(); ++i) {
    const auto& f = space.factors()[i];
    if (f.kind() == Factor::Kind::bags && f.bag(c[i]).size() > limit) return false;
  }
  return true;
}

}  // namespace dlc::rel
