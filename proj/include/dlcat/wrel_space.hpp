#pragma once

// Enumerated index spaces for the weighted relational model: base sets,
// bags (finite multisets) truncated at a maximum size, and finite products.

#include <compare>
#include <cstddef>
#include <map>
#include <memory>
#include <stdexcept>
#include <string>
#include <vector>

namespace dlc::rel {

class SpaceMismatch : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Ordered finite set of distinct atom names.
class BaseSet {
 public:
  BaseSet() = default;
  explicit BaseSet(std::vector<std::string> atoms);

  /// {a, b, c, ...} with n elements.
  static BaseSet letters(std::size_t n);
  /// The singleton {*}, carrier of the monoidal unit.
  static BaseSet unit();
  /// X ⊔ Y; Y's atoms are renamed if they clash with X's.
  static BaseSet disjoint_union(const BaseSet& x, const BaseSet& y);

  std::size_t size() const noexcept { return atoms_.size(); }
  const std::string& operator[](std::size_t i) const { return atoms_.at(i); }
  const std::vector<std::string>& atoms() const noexcept { return atoms_; }

  friend bool operator==(const BaseSet&, const BaseSet&) = default;

 private:
  std::vector<std::string> atoms_;
};

/// Multiset over atoms 0..n-1, as a dense count vector.
class Bag {
 public:
  Bag() = default;
  explicit Bag(std::size_t base_size) : counts_(base_size, 0) {}
  explicit Bag(std::vector<unsigned> counts);

  static Bag singleton(std::size_t base_size, std::size_t atom);

  std::size_t base_size() const noexcept { return counts_.size(); }
  unsigned size() const noexcept { return size_; }
  bool empty() const noexcept { return size_ == 0; }
  unsigned count(std::size_t atom) const { return counts_.at(atom); }
  const std::vector<unsigned>& counts() const noexcept { return counts_; }

  Bag plus(std::size_t atom) const;
  Bag operator+(const Bag& o) const;
  /// Atom list with repetitions, ascending.
  std::vector<std::size_t> elements() const;

  /// Size first, then counts in reverse lexicographic order, so that over
  /// {a, b} the enumeration reads [], [a], [b], [a,a], [a,b], [b,b], ...
  friend std::strong_ordering operator<=>(const Bag& a, const Bag& b);
  friend bool operator==(const Bag& a, const Bag& b) { return a.counts_ == b.counts_; }

  std::string render(const BaseSet& base) const;

 private:
  std::vector<unsigned> counts_;
  unsigned size_ = 0;
};

/// One enumerated factor of an index space.
class Factor {
 public:
  enum class Kind { atoms, bags };

  static Factor atoms(const BaseSet& base);
  static Factor bags(const BaseSet& base, unsigned max_size);

  Kind kind() const noexcept { return data_->kind; }
  const BaseSet& base() const noexcept { return data_->base; }
  unsigned max_size() const noexcept { return data_->max_size; }
  std::size_t size() const noexcept;

  /// Only valid for bag factors.
  const Bag& bag(std::size_t index) const { return data_->bags.at(index); }
  std::size_t index_of(const Bag& b) const;
  bool contains(const Bag& b) const;

  std::string render_point(std::size_t index) const;
  std::string describe() const;

  friend bool operator==(const Factor& a, const Factor& b);

 private:
  struct Data {
    Kind kind;
    BaseSet base;
    unsigned max_size = 0;
    std::vector<Bag> bags;
    std::map<Bag, std::size_t> index;
  };
  explicit Factor(std::shared_ptr<const Data> d) : data_(std::move(d)) {}
  std::shared_ptr<const Data> data_;
};

/// Product of factors, flat: tensoring concatenates factor lists, so the
/// tensor is strictly associative and the empty list (one point) is a
/// strict unit. Points are numbered in mixed radix, first factor most
/// significant.
class IndexSpace {
 public:
  IndexSpace() = default;
  explicit IndexSpace(std::vector<Factor> factors);

  static IndexSpace unit() { return IndexSpace(); }
  static IndexSpace atoms(const BaseSet& x) { return IndexSpace({Factor::atoms(x)}); }
  static IndexSpace bags(const BaseSet& x, unsigned max_size) { return IndexSpace({Factor::bags(x, max_size)}); }

  std::size_t size() const noexcept { return size_; }
  const std::vector<Factor>& factors() const noexcept { return factors_; }

  /// Per-factor coordinates of a point.
  std::vector<std::size_t> coords(std::size_t point) const;
  std::size_t point(const std::vector<std::size_t>& coords) const;

  /// Drops one-point atom factors, identifying R (x) A with A.
  IndexSpace strictify() const;

  std::string render_point(std::size_t point) const;
  std::string describe() const;

  friend IndexSpace operator*(const IndexSpace& a, const IndexSpace& b);
  friend bool operator==(const IndexSpace& a, const IndexSpace& b) { return a.factors_ == b.factors_; }

 private:
  std::vector<Factor> factors_;
  std::vector<std::size_t> radix_;  // stride per factor
  std::size_t size_ = 1;
};

/// Degree truncation. Bags are enumerated up to size D, and equations are
/// asserted only on the safe band, where bag sizes stay at most D - margin.
struct Truncation {
  unsigned D = 5;
  unsigned margin = 2;

  Truncation() = default;
  Truncation(unsigned d, unsigned m);

  unsigned safe_size() const noexcept { return D >= margin ? D - margin : 0; }
};

enum class BandRule {
  per_factor,  // every bag coordinate has size <= D - margin
  total,       // the bag coordinates' sizes sum to <= D - margin
};

/// Whether a point lies in the safe band.
bool in_band(const IndexSpace& space, std::size_t point, const Truncation& t, BandRule rule);

/// Total bag size of a point (sum over bag factors).
unsigned total_bag_size(const IndexSpace& space, std::size_t point);

}  // namespace dlc::rel
