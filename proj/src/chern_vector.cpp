#include "ulrichnorm/chern/chern_vector.hpp"

#include "ulrichnorm/error.hpp"

namespace ulrichnorm {

namespace {

void require_homogeneous(const GradedClass& cls, int k) {
  if (!cls.is_homogeneous(k)) {
    throw InputError("c" + std::to_string(k) + " must be a pure codimension-" + std::to_string(k) +
                     " class, got " + cls.to_string());
  }
}

}  // namespace

ChernVector::ChernVector(int rank, GradedClass c1, GradedClass c2, std::optional<GradedClass> c3)
    : rank_(rank), c1_(std::move(c1)), c2_(std::move(c2)), c3_(std::move(c3)) {
  if (rank_ < 0) throw InputError("rank must be nonnegative, got " + std::to_string(rank_));
  require_same_ring(c1_.ring(), c2_.ring());
  require_homogeneous(c1_, 1);
  require_homogeneous(c2_, 2);
  // c3 vanishes identically below dimension 3 and above rank 2.
  if (!c3_ && (ring()->dimension() < 3 || rank_ <= 2)) c3_ = GradedClass::zero(ring());
  if (c3_) {
    require_same_ring(c1_.ring(), c3_->ring());
    require_homogeneous(*c3_, 3);
  }
  for (int k = rank_ + 1; k <= 3; ++k) {
    if (!c(k).is_zero()) {
      throw InputError("c" + std::to_string(k) + " must vanish for a bundle of rank " + std::to_string(rank_) +
                       ", got " + c(k).to_string());
    }
  }
}

ChernVector::ChernVector(int rank, GradedClass c1, GradedClass c2)
    : ChernVector(rank, std::move(c1), std::move(c2), std::nullopt) {}

ChernVector ChernVector::trivial(const Ring& ring, int rank) {
  return ChernVector(rank, GradedClass::zero(ring), GradedClass::zero(ring), GradedClass::zero(ring));
}

ChernVector ChernVector::line(const GradedClass& c1) {
  return ChernVector(1, c1, GradedClass::zero(c1.ring()), GradedClass::zero(c1.ring()));
}

const GradedClass& ChernVector::c3() const {
  if (!c3_) throw InconsistentData("c3 is not known for this bundle");
  return *c3_;
}

GradedClass ChernVector::c(int k) const {
  switch (k) {
    case 0: return GradedClass::one(ring());
    case 1: return c1_;
    case 2: return c2_;
    case 3: return c3();
    default: throw OutOfRange("Chern classes are tracked up to c3");
  }
}

GradedClass ChernVector::total() const { return GradedClass::one(ring()) + c1_ + c2_ + c3(); }

std::string ChernVector::to_string() const {
  std::string out = "rank " + std::to_string(rank_) + ", c1 = " + c1_.to_string() + ", c2 = " + c2_.to_string();
  if (ring()->dimension() >= 3) out += ", c3 = " + (c3_ ? c3_->to_string() : std::string("unknown"));
  return out;
}

}  // namespace ulrichnorm
