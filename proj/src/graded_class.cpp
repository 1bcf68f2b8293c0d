#include "ulrichnorm/exactalg/graded_class.hpp"

#include "ulrichnorm/error.hpp"

namespace ulrichnorm {

GradedClass::GradedClass(Ring ring) : ring_(std::move(ring)) {
  if (!ring_) throw RingMismatch("null class ring");
  c1_.assign(ring_->divisor_rank(), Rational(0));
}

GradedClass GradedClass::scalar(const Ring& ring, const Rational& q) {
  GradedClass out(ring);
  out.c0_ = q;
  return out;
}

GradedClass GradedClass::divisor(const Ring& ring, DivisorCoords coords) {
  GradedClass out(ring);
  if (coords.size() != ring->divisor_rank()) {
    throw RingMismatch("divisor has " + std::to_string(coords.size()) + " coordinates, ring expects " +
                       std::to_string(ring->divisor_rank()));
  }
  out.c1_ = std::move(coords);
  return out;
}

GradedClass GradedClass::hyperplane_power(const Ring& ring, int k, const Rational& q) {
  if (k < 0 || k > ring->dimension()) {
    throw OutOfRange("H^" + std::to_string(k) + " exceeds ring dimension " + std::to_string(ring->dimension()));
  }
  if (k == 0) return scalar(ring, q);
  if (k == 1) {
    DivisorCoords h = ring->hyperplane();
    for (auto& x : h) x *= q;
    return divisor(ring, std::move(h));
  }
  if (ring->is_rank_one()) return top(ring, k, q);
  return top(ring, k, q * ring->top_degree());
}

GradedClass GradedClass::top(const Ring& ring, int k, const Rational& value) {
  if (k < 2 || k > ring->dimension()) {
    throw OutOfRange("codimension " + std::to_string(k) + " not representable in a ring of dimension " +
                     std::to_string(ring->dimension()));
  }
  GradedClass out(ring);
  (k == 2 ? out.c2_ : out.c3_) = value;
  return out;
}

GradedClass GradedClass::symbol(const Ring& ring, const std::string& name, const Rational& q) {
  auto coords = ring->symbol(name);
  if (!coords) throw InputError("class ring has no basis symbol " + name);
  for (auto& x : *coords) x *= q;
  return divisor(ring, std::move(*coords));
}

const Rational& GradedClass::entry(int k) const {
  if (k == 2) return c2_;
  if (k == 3) return c3_;
  throw OutOfRange("entry() takes codimension 2 or 3");
}

GradedClass GradedClass::part(int k) const {
  GradedClass out(ring_);
  switch (k) {
    case 0: out.c0_ = c0_; break;
    case 1: out.c1_ = c1_; break;
    case 2: out.c2_ = c2_; break;
    case 3: out.c3_ = c3_; break;
    default: break;
  }
  return out;
}

GradedClass GradedClass::truncated(int up_to) const {
  GradedClass out = *this;
  if (up_to < 0) out.c0_ = Rational(0);
  if (up_to < 1) out.c1_.assign(out.c1_.size(), Rational(0));
  if (up_to < 2) out.c2_ = Rational(0);
  if (up_to < 3) out.c3_ = Rational(0);
  return out;
}

bool GradedClass::is_zero() const {
  if (!c0_.is_zero() || !c2_.is_zero() || !c3_.is_zero()) return false;
  for (const auto& x : c1_) {
    if (!x.is_zero()) return false;
  }
  return true;
}

bool GradedClass::is_homogeneous(int k) const { return (*this - part(k)).is_zero(); }

GradedClass GradedClass::inverse() const {
  if (c0_.is_zero()) throw InputError("class with zero constant term is not invertible");
  const Rational inv0 = Rational(1) / c0_;
  GradedClass nil = *this * inv0;
  nil.c0_ = Rational(0);
  // (1 + N)^{-1} = 1 - N + N^2 - N^3, N^4 = 0 in dimension <= 3.
  GradedClass out = one(ring_);
  GradedClass term = one(ring_);
  for (int i = 1; i <= 3; ++i) {
    term = term * nil;
    if (i % 2 == 1) {
      out -= term;
    } else {
      out += term;
    }
  }
  return out * inv0;
}

GradedClass GradedClass::pow(unsigned e) const {
  GradedClass out = one(ring_);
  for (unsigned i = 0; i < e; ++i) out = out * *this;
  return out;
}

GradedClass& GradedClass::operator+=(const GradedClass& rhs) {
  require_same_ring(ring_, rhs.ring_);
  c0_ += rhs.c0_;
  for (std::size_t i = 0; i < c1_.size(); ++i) c1_[i] += rhs.c1_[i];
  c2_ += rhs.c2_;
  c3_ += rhs.c3_;
  return *this;
}

GradedClass& GradedClass::operator-=(const GradedClass& rhs) { return *this += -rhs; }

GradedClass& GradedClass::operator*=(const Rational& q) {
  c0_ *= q;
  for (auto& x : c1_) x *= q;
  c2_ *= q;
  c3_ *= q;
  return *this;
}

GradedClass GradedClass::operator-() const {
  GradedClass out = *this;
  out *= Rational(-1);
  return out;
}

GradedClass operator*(const GradedClass& a, const GradedClass& b) {
  require_same_ring(a.ring_, b.ring_);
  const int n = a.ring_->dimension();
  GradedClass out(a.ring_);
  out.c0_ = a.c0_ * b.c0_;
  for (std::size_t i = 0; i < out.c1_.size(); ++i) out.c1_[i] = a.c0_ * b.c1_[i] + b.c0_ * a.c1_[i];
  if (n >= 2) out.c2_ = a.c0_ * b.c2_ + b.c0_ * a.c2_ + a.ring_->pair(a.c1_, b.c1_);
  if (n >= 3) out.c3_ = a.c0_ * b.c3_ + b.c0_ * a.c3_ + a.c1_[0] * b.c2_ + b.c1_[0] * a.c2_;
  return out;
}

bool operator==(const GradedClass& a, const GradedClass& b) {
  if (a.ring_ != b.ring_ && !(*a.ring_ == *b.ring_)) return false;
  return a.c0_ == b.c0_ && a.c1_ == b.c1_ && a.c2_ == b.c2_ && a.c3_ == b.c3_;
}

std::string GradedClass::to_string() const {
  std::string out;
  auto term = [&out](const Rational& q, const std::string& sym) {
    if (q.is_zero()) return;
    Rational mag = q;
    if (out.empty()) {
      if (q.sign() < 0) out += "-";
    } else {
      out += q.sign() < 0 ? " - " : " + ";
    }
    mag = q.abs();
    if (sym.empty()) {
      out += mag.to_string();
    } else if (mag == Rational(1)) {
      out += sym;
    } else if (mag.is_integer()) {
      out += mag.to_string() + sym;
    } else {
      out += "(" + mag.to_string() + ")" + sym;
    }
  };
  term(c0_, "");
  if (ring_->is_rank_one()) {
    term(c1_[0], "H");
    term(c2_, "H^2");
    term(c3_, "H^3");
  } else {
    const auto& basis = std::get<SurfaceLatticeShape>(ring_->shape()).basis;
    for (std::size_t i = 0; i < basis.size(); ++i) term(c1_[i], basis[i]);
    term(c2_, "[pt]");
  }
  return out.empty() ? "0" : out;
}

Rational ring_degree(const Ring& ring, const GradedClass& cls, int codim) {
  require_same_ring(ring, cls.ring());
  const int n = ring->dimension();
  if (codim < 0 || codim > n) {
    throw OutOfRange("codimension " + std::to_string(codim) + " out of range for a ring of dimension " +
                     std::to_string(n));
  }
  if (const auto* r = std::get_if<RankOneShape>(&ring->shape())) {
    const Rational coeff = codim == 0 ? cls.codim0() : (codim == 1 ? cls.codim1()[0] : cls.entry(codim));
    return coeff * r->degree;
  }
  switch (codim) {
    case 0: return cls.codim0() * ring->top_degree();
    case 1: return ring->pair(cls.codim1(), ring->hyperplane());
    default: return cls.entry(2);
  }
}

Rational integrate(const GradedClass& cls) {
  const int n = cls.ring()->dimension();
  return ring_degree(cls.ring(), cls, n);
}

Rational intersect(const GradedClass& a, const GradedClass& b) {
  require_same_ring(a.ring(), b.ring());
  const int n = a.ring()->dimension();
  if (n < 2) throw OutOfRange("divisor intersection needs dimension >= 2");
  const GradedClass prod = a.part(1) * b.part(1);
  return ring_degree(a.ring(), prod, 2);
}

bool numerically_equal_divisors(const GradedClass& a, const GradedClass& b) {
  require_same_ring(a.ring(), b.ring());
  const GradedClass diff = a.part(1) - b.part(1);
  const Ring& ring = a.ring();
  if (ring->is_rank_one()) return diff.codim1()[0].is_zero();
  for (std::size_t i = 0; i < ring->divisor_rank(); ++i) {
    DivisorCoords e(ring->divisor_rank());
    e[i] = Rational(1);
    if (!ring->pair(diff.codim1(), e).is_zero()) return false;
  }
  return true;
}

}  // namespace ulrichnorm
