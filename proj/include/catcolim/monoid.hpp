#pragma once

#include <optional>
#include <string>
#include <vector>

#include "catcolim/colimits.hpp"

namespace catcolim {

class ObjectMonoid;

// A finite commutative monoid given by its multiplication table.
class CommMonoid {
 public:
  CommMonoid() = default;
  // Checks unit, associativity (IllDefinedProduct) and commutativity (NoncommutativeObjectTable).
  static CommMonoid from_table(std::vector<std::string> names, std::size_t unit, std::vector<std::vector<std::size_t>> mult);
  static CommMonoid cyclic(std::size_t n);
  static CommMonoid of(const ObjectMonoid& m);  // must be total
  static CommMonoid product(const CommMonoid& a, const CommMonoid& b);
  // Quotient by the congruence generated by the pairs; `classes` receives the projection.
  static CommMonoid quotient(const CommMonoid& m, const std::vector<std::pair<std::size_t, std::size_t>>& pairs,
                             std::vector<std::size_t>* classes = nullptr);

  std::size_t size() const { return names_.size(); }
  std::size_t unit() const { return unit_; }
  const std::string& name(std::size_t x) const { return names_[x]; }
  std::size_t mul(std::size_t a, std::size_t b) const { return table_[a][b]; }
  const std::vector<std::vector<std::size_t>>& table() const { return table_; }
  std::string format() const;

 private:
  std::vector<std::string> names_;
  std::size_t unit_ = 0;
  std::vector<std::vector<std::size_t>> table_;
};

// Inputs of a colimit of commutative monoids. Maps are element images.
//   Coproduct:   monoids {A, B}
//   Coequalizer: monoids {B}, maps {f, g} (images in B of the source elements)
//   Pushout:     monoids {A, B}, maps {f into A, g into B} over a common source
struct MonoidColimitData {
  std::vector<CommMonoid> monoids;
  std::vector<std::vector<std::size_t>> maps;
};

// Direct product, or the quotient by the stabilized pairs b f(a) ~ b g(a).
CommMonoid monoid_colimit_oracle(Kind kind, const MonoidColimitData& data);

// A unit-preserving multiplicative bijection a -> b, by backtracking.
std::optional<std::vector<std::size_t>> monoid_isomorphism(const CommMonoid& a, const CommMonoid& b);
inline bool isomorphic(const CommMonoid& a, const CommMonoid& b) { return monoid_isomorphism(a, b).has_value(); }

}  // namespace catcolim
