#include "pihall/perm.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "pihall/error.hpp"

namespace pihall {

Perm::Perm(int degree) : images_(static_cast<std::size_t>(degree)) {
  if (degree < 0) fail(Errc::invalid_argument, "negative degree");
  std::iota(images_.begin(), images_.end(), 0);
}

Perm::Perm(std::vector<Point> images) : images_(std::move(images)) {
  std::vector<bool> seen(images_.size(), false);
  for (Point x : images_) {
    if (x < 0 || x >= degree() || seen[static_cast<std::size_t>(x)])
      fail(Errc::not_a_permutation, "image vector is not a bijection on 0..degree-1");
    seen[static_cast<std::size_t>(x)] = true;
  }
}

bool Perm::is_identity() const {
  for (Point x = 0; x < degree(); ++x)
    if (images_[static_cast<std::size_t>(x)] != x) return false;
  return true;
}

Perm Perm::inverse() const {
  std::vector<Point> inv(images_.size());
  for (Point x = 0; x < degree(); ++x) inv[static_cast<std::size_t>(images_[static_cast<std::size_t>(x)])] = x;
  Perm p;
  p.images_ = std::move(inv);
  return p;
}

Perm Perm::operator*(const Perm& rhs) const {
  if (degree() != rhs.degree()) fail(Errc::degree_mismatch, "product of permutations of different degree");
  std::vector<Point> out(images_.size());
  for (std::size_t x = 0; x < images_.size(); ++x) out[x] = rhs.images_[static_cast<std::size_t>(images_[x])];
  Perm p;
  p.images_ = std::move(out);
  return p;
}

Perm Perm::conjugated_by(const Perm& g) const { return g.inverse() * (*this) * g; }

Perm Perm::power(long long e) const {
  if (e < 0) return inverse().power(-e);
  Perm acc = Perm::identity(degree());
  Perm base = *this;
  while (e > 0) {
    if (e & 1) acc = acc * base;
    base = base * base;
    e >>= 1;
  }
  return acc;
}

Order Perm::order() const {
  Order result = 1;
  for (const auto& c : cycles()) result = std::lcm(result, static_cast<Order>(c.size()));
  return result;
}

std::vector<std::vector<Point>> Perm::cycles(bool include_fixed) const {
  std::vector<std::vector<Point>> out;
  std::vector<bool> seen(images_.size(), false);
  for (Point start = 0; start < degree(); ++start) {
    if (seen[static_cast<std::size_t>(start)]) continue;
    std::vector<Point> cyc;
    Point x = start;
    do {
      seen[static_cast<std::size_t>(x)] = true;
      cyc.push_back(x);
      x = images_[static_cast<std::size_t>(x)];
    } while (x != start);
    if (cyc.size() > 1 || include_fixed) out.push_back(std::move(cyc));
  }
  return out;
}

std::string Perm::to_cycle_string() const {
  auto cs = cycles();
  if (cs.empty()) return "()";
  std::ostringstream os;
  for (const auto& c : cs) {
    os << '(';
    for (std::size_t i = 0; i < c.size(); ++i) {
      if (i) os << ' ';
      os << c[i] + 1;
    }
    os << ')';
  }
  return os.str();
}

Point Perm::min_moved_point() const {
  for (Point x = 0; x < degree(); ++x)
    if (images_[static_cast<std::size_t>(x)] != x) return x;
  return -1;
}

std::size_t Perm::hash() const {
  std::size_t h = 1469598103934665603ull;  // FNV-1a
  for (Point x : images_) {
    h ^= static_cast<std::size_t>(x);
    h *= 1099511628211ull;
  }
  return h;
}

Perm Perm::from_cycles(int degree, const std::string& text) {
  std::vector<Point> img(static_cast<std::size_t>(degree));
  std::iota(img.begin(), img.end(), 0);
  std::vector<bool> used(static_cast<std::size_t>(degree), false);

  std::size_t i = 0;
  auto skip_ws = [&] { while (i < text.size() && (text[i] == ' ' || text[i] == '\t')) ++i; };
  skip_ws();
  while (i < text.size()) {
    if (text[i] != '(') fail(Errc::parse_error, "cycle notation: expected '(' in '" + text + "'");
    ++i;
    std::vector<Point> cyc;
    skip_ws();
    while (i < text.size() && text[i] != ')') {
      if (!isdigit(static_cast<unsigned char>(text[i])))
        fail(Errc::parse_error, "cycle notation: expected point number in '" + text + "'");
      long v = 0;
      while (i < text.size() && isdigit(static_cast<unsigned char>(text[i]))) v = v * 10 + (text[i++] - '0');
      if (v < 1 || v > degree)
        fail(Errc::parse_error, "cycle notation: point " + std::to_string(v) + " outside 1.." + std::to_string(degree));
      Point p = static_cast<Point>(v - 1);
      if (used[static_cast<std::size_t>(p)])
        fail(Errc::parse_error, "cycle notation: point " + std::to_string(v) + " repeated");
      used[static_cast<std::size_t>(p)] = true;
      cyc.push_back(p);
      skip_ws();
      if (i < text.size() && text[i] == ',') { ++i; skip_ws(); }
    }
    if (i >= text.size()) fail(Errc::parse_error, "cycle notation: unbalanced '(' in '" + text + "'");
    ++i;  // ')'
    for (std::size_t j = 0; j + 1 < cyc.size(); ++j) img[static_cast<std::size_t>(cyc[j])] = cyc[j + 1];
    if (cyc.size() > 1) img[static_cast<std::size_t>(cyc.back())] = cyc.front();
    skip_ws();
  }
  return Perm(std::move(img));
}

}  // namespace pihall
