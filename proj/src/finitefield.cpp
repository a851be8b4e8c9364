#include "cohcfg/finitefield.hpp"

#include <algorithm>
#include <string>

#include "cohcfg/errors.hpp"

namespace cohcfg {

namespace {

using Poly = std::vector<std::uint32_t>;  // constant term first

bool is_prime(std::uint32_t p) {
  if (p < 2) return false;
  for (std::uint32_t k = 2; k * k <= p; ++k)
    if (p % k == 0) return false;
  return true;
}

std::uint64_t ipow(std::uint64_t base, std::uint32_t e) {
  std::uint64_t r = 1;
  while (e-- > 0) r *= base;
  return r;
}

Poly digits(std::uint32_t code, std::uint32_t p, std::uint32_t d) {
  Poly out(d, 0);
  for (std::uint32_t i = 0; i < d; ++i) {
    out[i] = code % p;
    code /= p;
  }
  return out;
}

std::uint32_t encode(const Poly& digits, std::uint32_t p) {
  std::uint32_t code = 0;
  for (auto it = digits.rbegin(); it != digits.rend(); ++it) code = code * p + *it;
  return code;
}

std::uint32_t inv_mod_p(std::uint32_t a, std::uint32_t p) {
  for (std::uint32_t x = 1; x < p; ++x)
    if ((a * x) % p == 1) return x;
  throw DomainError("no inverse modulo p");
}

// Remainder of `num` modulo monic-or-not `den` (den leading coefficient nonzero).
Poly poly_rem(Poly num, const Poly& den, std::uint32_t p) {
  const std::size_t dd = den.size() - 1;
  const std::uint32_t lead_inv = inv_mod_p(den.back(), p);
  for (std::size_t i = num.size(); i-- > dd;) {
    std::uint32_t c = num[i] % p;
    if (c == 0) continue;
    c = (c * lead_inv) % p;
    for (std::size_t j = 0; j <= dd; ++j) {
      std::uint32_t& t = num[i - dd + j];
      t = (t + p - (c * den[j]) % p) % p;
    }
  }
  num.resize(dd);
  return num;
}

Poly poly_mulmod(const Poly& a, const Poly& b, const Poly& modulus, std::uint32_t p) {
  Poly prod(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) prod[i + j] = (prod[i + j] + a[i] * b[j]) % p;
  }
  return poly_rem(std::move(prod), modulus, p);
}

}  // namespace

bool is_irreducible(std::uint32_t p, const std::vector<std::uint32_t>& poly) {
  if (poly.size() < 2 || poly.back() % p == 0) return false;
  const std::size_t d = poly.size() - 1;
  if (d == 1) return true;
  for (std::size_t fd = 1; fd <= d / 2; ++fd) {
    // all monic factors of degree fd
    const std::uint64_t count = ipow(p, static_cast<std::uint32_t>(fd));
    for (std::uint64_t c = 0; c < count; ++c) {
      Poly f = digits(static_cast<std::uint32_t>(c), p, static_cast<std::uint32_t>(fd));
      f.push_back(1);
      Poly r = poly_rem(poly, f, p);
      if (std::all_of(r.begin(), r.end(), [](std::uint32_t x) { return x == 0; })) return false;
    }
  }
  return true;
}

std::shared_ptr<const Field> Field::make(std::uint32_t p, std::uint32_t d) {
  if (!is_prime(p)) throw UsageError("field characteristic must be prime, got " + std::to_string(p));
  if (d == 0) throw UsageError("field degree must be at least 1");
  const std::uint64_t count = ipow(p, d);
  for (std::uint64_t c = 0; c < count; ++c) {
    Poly m = digits(static_cast<std::uint32_t>(c), p, d);
    m.push_back(1);
    if (is_irreducible(p, m)) return with_modulus(p, std::move(m));
  }
  throw UsageError("no irreducible polynomial found");  // unreachable
}

std::shared_ptr<const Field> Field::with_modulus(std::uint32_t p, std::vector<std::uint32_t> modulus) {
  return std::shared_ptr<const Field>(new Field(p, std::move(modulus)));
}

Field::Field(std::uint32_t p, std::vector<std::uint32_t> modulus)
    : p_(p), modulus_(std::move(modulus)) {
  if (!is_prime(p_)) throw UsageError("field characteristic must be prime, got " + std::to_string(p_));
  if (modulus_.size() < 2 || modulus_.back() != 1)
    throw UsageError("modulus must be monic of degree >= 1");
  d_ = static_cast<std::uint32_t>(modulus_.size() - 1);
  const std::uint64_t q = ipow(p_, d_);
  if (q > (1u << 20)) throw UsageError("field order too large for this library");
  q_ = static_cast<std::uint32_t>(q);
  for (auto c : modulus_)
    if (c >= p_) throw UsageError("modulus coefficient out of range");
  if (!is_irreducible(p_, modulus_)) throw UsageError("modulus is not irreducible");

  auto slow_mul = [&](Code a, Code b) {
    return encode(poly_mulmod(digits(a, p_, d_), digits(b, p_, d_), modulus_, p_), p_);
  };

  // primitive element: least code of multiplicative order q-1
  for (Code g = 1; g < q_; ++g) {
    std::uint64_t ord = 1;
    Code x = g;
    while (x != 1) {
      x = slow_mul(x, g);
      ++ord;
    }
    if (ord == q_ - 1) {
      primitive_ = g;
      break;
    }
  }
  exp_.assign(2 * static_cast<std::size_t>(q_ - 1), 0);
  log_.assign(q_, 0);
  Code x = 1;
  for (std::uint32_t i = 0; i < q_ - 1; ++i) {
    exp_[i] = x;
    exp_[i + q_ - 1] = x;
    log_[x] = i;
    x = slow_mul(x, primitive_);
  }

  if (q_ <= 1024) {
    add_table_.resize(static_cast<std::size_t>(q_) * q_);
    for (Code a = 0; a < q_; ++a)
      for (Code b = 0; b < q_; ++b) {
        Poly da = digits(a, p_, d_), db = digits(b, p_, d_);
        for (std::uint32_t i = 0; i < d_; ++i) da[i] = (da[i] + db[i]) % p_;
        add_table_[static_cast<std::size_t>(a) * q_ + b] = encode(da, p_);
      }
  }
}

Field::Code Field::add(Code a, Code b) const {
  if (p_ == 2) return a ^ b;
  if (!add_table_.empty()) return add_table_[static_cast<std::size_t>(a) * q_ + b];
  Poly da = digits(a, p_, d_), db = digits(b, p_, d_);
  for (std::uint32_t i = 0; i < d_; ++i) da[i] = (da[i] + db[i]) % p_;
  return encode(da, p_);
}

Field::Code Field::neg(Code a) const {
  if (p_ == 2) return a;
  Poly da = digits(a, p_, d_);
  for (auto& c : da) c = (p_ - c) % p_;
  return encode(da, p_);
}

Field::Code Field::sub(Code a, Code b) const { return add(a, neg(b)); }

Field::Code Field::mul(Code a, Code b) const {
  if (a == 0 || b == 0) return 0;
  return exp_[log_[a] + log_[b]];
}

Field::Code Field::inv(Code a) const {
  if (a == 0) throw DomainError("inverse of zero");
  if (q_ == 2) return 1;
  return exp_[(q_ - 1 - log_[a]) % (q_ - 1)];
}

Field::Code Field::pow(Code a, std::uint64_t e) const {
  if (e == 0) return 1;
  if (a == 0) return 0;
  return exp_[(static_cast<std::uint64_t>(log_[a]) * (e % (q_ - 1))) % (q_ - 1)];
}

Field::Code Field::trace(Code a) const {
  Code sum = 0;
  Code x = a;
  for (std::uint32_t i = 0; i < d_; ++i) {
    sum = add(sum, x);
    x = frobenius(x);
  }
  return sum;
}

std::uint64_t Field::multiplicative_order(Code a) const {
  if (a == 0) throw DomainError("zero has no multiplicative order");
  std::uint64_t ord = 1;
  for (Code x = a; x != 1; x = mul(x, a)) ++ord;
  return ord;
}

std::vector<Field::Code> Field::trace_zero_set() const {
  if (p_ != 2) throw UsageError("trace-zero set is only defined here for characteristic 2");
  std::vector<Code> out;
  for (Code x = 0; x < q_; ++x)
    if (trace(x) == 0) out.push_back(x);
  return out;
}

FieldElement::FieldElement(std::shared_ptr<const Field> field, Field::Code code)
    : field_(std::move(field)), code_(code) {
  if (!field_) throw UsageError("field element without a field");
  if (!field_->contains(code_)) throw UsageError("element code out of range");
}

const Field& FieldElement::checked(const FieldElement& o) const {
  if (field_ != o.field_ && (field_->characteristic() != o.field_->characteristic() ||
                             field_->modulus() != o.field_->modulus()))
    throw UsageError("operands belong to different fields");
  return *field_;
}

FieldElement FieldElement::operator+(const FieldElement& o) const {
  return {field_, checked(o).add(code_, o.code_)};
}
FieldElement FieldElement::operator-(const FieldElement& o) const {
  return {field_, checked(o).sub(code_, o.code_)};
}
FieldElement FieldElement::operator*(const FieldElement& o) const {
  return {field_, checked(o).mul(code_, o.code_)};
}
FieldElement FieldElement::operator/(const FieldElement& o) const {
  return {field_, checked(o).div(code_, o.code_)};
}
FieldElement FieldElement::inverse() const { return {field_, field_->inv(code_)}; }
FieldElement FieldElement::pow(std::uint64_t e) const { return {field_, field_->pow(code_, e)}; }
FieldElement FieldElement::frobenius() const { return {field_, field_->frobenius(code_)}; }
FieldElement FieldElement::trace() const { return {field_, field_->trace(code_)}; }

bool FieldElement::operator==(const FieldElement& o) const {
  checked(o);
  return code_ == o.code_;
}

FieldElement field_arith(FieldOp op, const std::vector<FieldElement>& args, std::uint64_t exponent) {
  const std::size_t want = (op == FieldOp::add || op == FieldOp::mul) ? 2 : 1;
  if (args.size() != want)
    throw UsageError("field_arith: expected " + std::to_string(want) + " arguments");
  switch (op) {
    case FieldOp::add: return args[0] + args[1];
    case FieldOp::mul: return args[0] * args[1];
    case FieldOp::inv: return args[0].inverse();
    case FieldOp::pow: return args[0].pow(exponent);
    case FieldOp::frob: return args[0].frobenius();
  }
  throw UsageError("field_arith: unknown operation");
}

QuadExtension::QuadExtension(std::shared_ptr<const Field> base) : base_(std::move(base)) {
  if (!base_ || base_->characteristic() != 2)
    throw UsageError("quadratic extension model requires characteristic 2");
  nu_ = 0;
  while (nu_ < base_->order() && base_->trace(nu_) != 1) ++nu_;
  if (nu_ == base_->order()) throw UsageError("base field has no trace-one element");
}

QuadExtension::Elem QuadExtension::add(Elem u, Elem v) const { return {u.a ^ v.a, u.b ^ v.b}; }

// (a + bx)(c + dx) = ac + bd*nu + (ad + bc + bd) x, using x^2 = x + nu
QuadExtension::Elem QuadExtension::mul(Elem u, Elem v) const {
  const Field& f = *base_;
  const Field::Code bd = f.mul(u.b, v.b);
  return {f.add(f.mul(u.a, v.a), f.mul(bd, nu_)), f.add(f.add(f.mul(u.a, v.b), f.mul(u.b, v.a)), bd)};
}

QuadExtension::Elem QuadExtension::conj(Elem u) const { return {base_->add(u.a, u.b), u.b}; }

Field::Code QuadExtension::norm(Elem u) const {
  const Elem n = mul(u, conj(u));
  if (n.b != 0) throw IntegrityError("norm left the base field");
  return n.a;
}

QuadExtension::Elem QuadExtension::inv(Elem u) const {
  if (u.a == 0 && u.b == 0) throw DomainError("inverse of zero");
  const Field::Code ninv = base_->inv(norm(u));
  const Elem c = conj(u);
  return {base_->mul(c.a, ninv), base_->mul(c.b, ninv)};
}

}  // namespace cohcfg
