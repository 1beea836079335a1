#pragma once

// Exponent-vector model of the toric ideals of the three Γ pairings.
//
// Polynomial rings are never built over a field: every question asked here
// (binomial membership, reduction, S-pairs, standard monomials) is decided on
// exponent vectors, which is valid for binomial and monomial ideals over any
// field.
//
// Variables: one x per nonempty ideal of P, one y per nonempty ideal of Q,
// and z. In the OC and CC rings some variables are *named* by max(ideal)
// but are always *keyed* by the ideal itself. x_∅ and y_∅ are z.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "posetpoly/gamma.hpp"
#include "posetpoly/poset.hpp"

namespace posetpoly {

enum class VariableClass { X, Y, Z };

struct ToricVariable {
  VariableClass cls = VariableClass::Z;
  ElementMask ideal = 0;  // key; 0 for z
  ElementMask label = 0;  // the ideal, or max(ideal) when named by its antichain

  friend bool operator==(const ToricVariable&, const ToricVariable&) = default;
};

/// Total degree and the image t^alpha s^degree under the presentation map.
struct ImageVector {
  IntVector t;
  Int s = 0;

  friend bool operator==(const ImageVector&, const ImageVector&) = default;
};

class Monomial {
 public:
  Monomial() = default;
  explicit Monomial(std::size_t num_variables) : exponents_(num_variables, 0) {}
  explicit Monomial(std::vector<int> exponents) : exponents_(std::move(exponents)) {}

  std::size_t num_variables() const { return exponents_.size(); }
  int exponent(std::size_t var) const { return exponents_[var]; }
  int degree() const;
  const std::vector<int>& exponents() const { return exponents_; }

  Monomial& multiply_by(std::size_t var, int power = 1) {
    exponents_[var] += power;
    return *this;
  }

  bool divides(const Monomial& other) const;
  bool is_squarefree() const;
  Monomial operator*(const Monomial& other) const;
  /// Exact quotient; requires divisor.divides(*this).
  Monomial operator/(const Monomial& divisor) const;
  static Monomial lcm(const Monomial& a, const Monomial& b);
  static bool coprime(const Monomial& a, const Monomial& b);

  friend bool operator==(const Monomial&, const Monomial&) = default;
  friend auto operator<=>(const Monomial&, const Monomial&) = default;

 private:
  std::vector<int> exponents_;
};

/// first - second.
struct Binomial {
  Monomial first;
  Monomial second;

  friend bool operator==(const Binomial&, const Binomial&) = default;
};

/// Graded reverse lexicographic order on a ring whose variables are listed
/// in ascending order (index 0 is the least variable).
class MonomialOrderSpec {
 public:
  MonomialOrderSpec(PairingKind kind, std::vector<ToricVariable> ascending);

  PairingKind kind() const { return kind_; }
  const std::vector<ToricVariable>& ascending_variables() const { return variables_; }

  /// a < b: lower degree first; on ties the monomial with the larger
  /// exponent at the least variable where they differ is smaller.
  bool less(const Monomial& a, const Monomial& b) const;

  /// The larger of the two terms.
  const Monomial& initial(const Binomial& b) const { return less(b.first, b.second) ? b.second : b.first; }
  const Monomial& trailing(const Binomial& b) const { return less(b.first, b.second) ? b.first : b.second; }

 private:
  PairingKind kind_;
  std::vector<ToricVariable> variables_;
};

class ToricRing {
 public:
  /// kind must be OO, OC or CC; |P| = |Q|.
  ToricRing(PairingKind kind, const Poset& p, const Poset& q);

  PairingKind kind() const { return kind_; }
  const Poset& p() const { return p_; }
  const Poset& q() const { return q_; }
  int dim() const { return p_.size(); }

  /// Ascending in the monomial order: z, then y's, then x's; within a
  /// class by (ideal size, ideal bit pattern).
  const std::vector<ToricVariable>& variables() const { return variables_; }
  std::size_t num_variables() const { return variables_.size(); }

  std::size_t z() const { return 0; }
  /// Index of x keyed by an ideal of P; the empty ideal maps to z.
  std::size_t x(ElementMask ideal) const;
  std::size_t y(ElementMask ideal) const;

  /// t-exponent of a single variable.
  const IntVector& image(std::size_t var) const { return images_[var]; }

  const MonomialOrderSpec& order() const { return order_; }

  std::string name(std::size_t var) const;
  std::string to_string(const Monomial& m) const;
  std::string to_string(const Binomial& b) const;

  Monomial variable(std::size_t var) const { return Monomial(num_variables()).multiply_by(var); }
  Monomial product(std::size_t a, std::size_t b) const { return variable(a).multiply_by(b); }

 private:
  PairingKind kind_;
  Poset p_;
  Poset q_;
  std::vector<ToricVariable> variables_;
  std::vector<IntVector> images_;
  std::vector<std::size_t> x_index_;  // by position in ideal_masks(p)
  std::vector<std::size_t> y_index_;
  std::vector<ElementMask> p_ideals_;
  std::vector<ElementMask> q_ideals_;
  MonomialOrderSpec order_;
};

std::vector<ToricVariable> variables(PairingKind kind, const Poset& p, const Poset& q);

ImageVector exponent_image(const ToricRing& ring, const Monomial& m);

bool in_toric_ideal(const ToricRing& ring, const Binomial& b);

MonomialOrderSpec monomial_order(PairingKind kind, const Poset& p, const Poset& q);

/// G_OO (families i-iii), G_OC (iv-vi) or G_CC (vii-ix), with x_∅ = y_∅ = z
/// substituted. Binomials keep the printed orientation; duplicates removed.
std::vector<Binomial> generators_G(const ToricRing& ring);

/// Fully reduced form of a monomial modulo G (rewrite initial -> trailing).
Monomial normal_form(const Monomial& m, const std::vector<Binomial>& g, const MonomialOrderSpec& order);

/// Reduces both terms; nullopt means the binomial reduced to zero.
std::optional<Binomial> reduce(const Binomial& b, const std::vector<Binomial>& g, const MonomialOrderSpec& order);

struct BuchbergerReport {
  bool generators_in_ideal = false;
  bool s_pairs_reduce = false;
  bool kernel_reduces = false;
  std::size_t s_pairs_checked = 0;
  std::size_t fibers_checked = 0;

  bool passed() const { return generators_in_ideal && s_pairs_reduce && kernel_reduces; }
};

inline constexpr int kDefaultDegreeCap = 4;

/// Every S-pair of G reduces to zero, and every binomial u - v of degree
/// <= degree_cap in the toric ideal (found by enumerating monomial fibers
/// of the presentation map, independently of G) reduces to zero.
BuchbergerReport buchberger_check(const ToricRing& ring, const std::vector<Binomial>& g,
                                  int degree_cap = kDefaultDegreeCap);
bool buchberger_verify(const ToricRing& ring, const std::vector<Binomial>& g, int degree_cap = kDefaultDegreeCap);

std::vector<Monomial> initial_monomials(const std::vector<Binomial>& g, const MonomialOrderSpec& order);

/// Requires buchberger_verify(ring, g). True iff every initial monomial is
/// squarefree.
bool initial_ideal_squarefree(const ToricRing& ring, const std::vector<Binomial>& g,
                              int degree_cap = kDefaultDegreeCap);

/// Ring-free form for arbitrary binomial sets: requires G to be a Gröbner
/// basis of the ideal it generates (all S-pairs reduce to zero).
bool initial_ideal_squarefree(const std::vector<Binomial>& g, const MonomialOrderSpec& order);

/// S-pair criterion alone: G is a Gröbner basis of the ideal it generates.
bool s_pairs_reduce(const std::vector<Binomial>& g, const MonomialOrderSpec& order,
                    std::size_t* checked = nullptr);

/// Number of degree-n monomials in num_variables variables divisible by no
/// monomial of `initial`. Requires every initial monomial to be squarefree
/// of degree 2.
std::uint64_t hilbert_function(const std::vector<Monomial>& initial, std::size_t num_variables, int n);

}  // namespace posetpoly
