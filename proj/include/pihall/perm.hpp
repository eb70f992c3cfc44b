#ifndef PIHALL_PERM_HPP_
#define PIHALL_PERM_HPP_

#include <cstdint>
#include <string>
#include <vector>

#include "pihall/bounds.hpp"

namespace pihall {

using Point = int;

// A permutation of the points 0..degree-1, stored as its image vector.
// Products compose left-to-right: (p * q)(x) = q(p(x)), the usual convention
// for right actions, so conjugation is h^g = g^-1 * h * g.
//
// Points are 0-indexed internally; all text I/O (cycle notation) is 1-indexed.
class Perm {
 public:
  Perm() = default;
  explicit Perm(int degree);                       // identity
  explicit Perm(std::vector<Point> images);        // validates bijectivity
  static Perm identity(int degree) { return Perm(degree); }

  // Parse 1-indexed disjoint-cycle notation, e.g. "(1 2 3)(4 5)" or "()".
  static Perm from_cycles(int degree, const std::string& text);

  int degree() const { return static_cast<int>(images_.size()); }
  Point operator[](Point x) const { return images_[static_cast<std::size_t>(x)]; }
  const std::vector<Point>& images() const { return images_; }

  bool is_identity() const;
  Perm inverse() const;
  Perm operator*(const Perm& rhs) const;           // this first, then rhs
  Perm conjugated_by(const Perm& g) const;         // g^-1 * (*this) * g
  Perm power(long long e) const;

  Order order() const;                             // lcm of cycle lengths
  std::vector<std::vector<Point>> cycles(bool include_fixed = false) const;
  std::string to_cycle_string() const;             // 1-indexed, "()" for identity

  // Smallest moved point, or -1 for the identity.
  Point min_moved_point() const;

  bool operator==(const Perm& o) const { return images_ == o.images_; }
  bool operator!=(const Perm& o) const { return images_ != o.images_; }
  bool operator<(const Perm& o) const { return images_ < o.images_; }

  std::size_t hash() const;

 private:
  std::vector<Point> images_;
};

struct PermHash {
  std::size_t operator()(const Perm& p) const { return p.hash(); }
};

}  // namespace pihall

#endif  // PIHALL_PERM_HPP_
