#pragma once

#include <cstdint>
#include <memory>
#include <vector>

namespace cohcfg {

/// The finite field GF(p^d) in a polynomial basis.
///
/// Elements are identified with their canonical code: the integer whose
/// base-p digits are the polynomial coefficients (lowest degree first).
/// Codes range over 0..p^d-1 and code order is the element order used
/// everywhere downstream. Instances are immutable; share them through
/// `std::shared_ptr<const Field>`.
class Field {
 public:
  using Code = std::uint32_t;

  /// GF(p^d) with the lexicographically least irreducible monic modulus.
  static std::shared_ptr<const Field> make(std::uint32_t p, std::uint32_t d);
  /// GF(p^d) with an explicit monic modulus given as d+1 coefficients,
  /// constant term first. Throws UsageError if it is not irreducible.
  static std::shared_ptr<const Field> with_modulus(std::uint32_t p,
                                                   std::vector<std::uint32_t> modulus);

  std::uint32_t characteristic() const { return p_; }
  std::uint32_t degree() const { return d_; }
  std::uint32_t order() const { return q_; }
  const std::vector<std::uint32_t>& modulus() const { return modulus_; }

  Code add(Code a, Code b) const;
  Code sub(Code a, Code b) const;
  Code neg(Code a) const;
  Code mul(Code a, Code b) const;
  /// Throws DomainError for a == 0.
  Code inv(Code a) const;
  Code div(Code a, Code b) const { return mul(a, inv(b)); }
  Code pow(Code a, std::uint64_t e) const;
  /// x -> x^p.
  Code frobenius(Code a) const { return pow(a, p_); }
  /// Absolute trace x + x^p + ... + x^{p^{d-1}}; the result is a code < p.
  Code trace(Code a) const;
  Code one() const { return 1; }

  /// Least code generating the multiplicative group.
  Code primitive_element() const { return primitive_; }
  /// Multiplicative order of a nonzero element.
  std::uint64_t multiplicative_order(Code a) const;

  /// All trace-zero elements in code order (characteristic 2 only).
  std::vector<Code> trace_zero_set() const;

  bool contains(Code a) const { return a < q_; }

 private:
  Field(std::uint32_t p, std::vector<std::uint32_t> modulus);

  std::uint32_t p_;
  std::uint32_t d_;
  std::uint32_t q_;
  std::vector<std::uint32_t> modulus_;
  Code primitive_ = 0;
  std::vector<Code> exp_;       // exp_[i] = primitive^i, length 2(q-1)
  std::vector<std::uint32_t> log_;
  std::vector<Code> add_table_;  // q*q when q is small, otherwise empty
};

/// True iff the monic polynomial (constant term first) is irreducible over
/// GF(p). Exhaustive search for monic factors of degree <= d/2.
bool is_irreducible(std::uint32_t p, const std::vector<std::uint32_t>& poly);

/// A value type pairing an element code with its field.
class FieldElement {
 public:
  FieldElement(std::shared_ptr<const Field> field, Field::Code code);

  const std::shared_ptr<const Field>& field() const { return field_; }
  Field::Code code() const { return code_; }

  FieldElement operator+(const FieldElement& o) const;
  FieldElement operator-(const FieldElement& o) const;
  FieldElement operator*(const FieldElement& o) const;
  FieldElement operator/(const FieldElement& o) const;
  FieldElement inverse() const;
  FieldElement pow(std::uint64_t e) const;
  FieldElement frobenius() const;
  /// Absolute trace as an element of the same field (lies in the prime subfield).
  FieldElement trace() const;
  bool is_zero() const { return code_ == 0; }

  bool operator==(const FieldElement& o) const;
  bool operator!=(const FieldElement& o) const { return !(*this == o); }

 private:
  const Field& checked(const FieldElement& o) const;

  std::shared_ptr<const Field> field_;
  Field::Code code_;
};

enum class FieldOp { add, mul, inv, pow, frob };

/// Dispatcher over the basic field operations. add/mul take two arguments,
/// the others one; `exponent` is used by pow only.
FieldElement field_arith(FieldOp op, const std::vector<FieldElement>& args,
                         std::uint64_t exponent = 0);

/// GF(q^2) over GF(q) in characteristic 2, modelled as pairs (a, b) meaning
/// a + b*x with x^2 = x + nu and Tr(nu) = 1.
class QuadExtension {
 public:
  struct Elem {
    Field::Code a = 0;
    Field::Code b = 0;
    bool operator==(const Elem&) const = default;
  };

  /// nu is the least trace-one element of the base field.
  explicit QuadExtension(std::shared_ptr<const Field> base);

  const Field& base() const { return *base_; }
  const std::shared_ptr<const Field>& base_ptr() const { return base_; }
  Field::Code nu() const { return nu_; }

  Elem add(Elem u, Elem v) const;
  Elem mul(Elem u, Elem v) const;
  /// Throws DomainError on zero.
  Elem inv(Elem u) const;
  /// The q-power Frobenius (a, b) -> (a + b, b).
  Elem conj(Elem u) const;
  /// u * conj(u); always in the base field.
  Field::Code norm(Elem u) const;
  Elem square(Elem u) const { return mul(u, u); }
  static Elem embed(Field::Code a) { return {a, 0}; }
  bool in_base(Elem u) const { return u.b == 0; }

 private:
  std::shared_ptr<const Field> base_;
  Field::Code nu_;
};

}  // namespace cohcfg
