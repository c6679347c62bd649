#ifndef DKH_ERROR_HPP
#define DKH_ERROR_HPP

#include <stdexcept>
#include <string>

namespace dkh {

// All library failures derive from Error; `kind` is a stable machine-readable tag.
class Error : public std::runtime_error {
 public:
  Error(std::string kind, const std::string& what)
      : std::runtime_error(what), kind_(std::move(kind)) {}
  const std::string& kind() const noexcept { return kind_; }

 private:
  std::string kind_;
};

#define DKH_DEFINE_ERROR(Name)                                                 \
  class Name : public Error {                                                  \
   public:                                                                     \
    explicit Name(const std::string& what) : Error(#Name, what) {}             \
  };

DKH_DEFINE_ERROR(SyntaxError)
DKH_DEFINE_ERROR(UnmatchedCrossing)
DKH_DEFINE_ERROR(SignMismatch)
DKH_DEFINE_ERROR(UnknownCrossing)
DKH_DEFINE_ERROR(NotAKnot)
DKH_DEFINE_ERROR(BadArc)
DKH_DEFINE_ERROR(ArityMismatch)
DKH_DEFINE_ERROR(CycleNotFree)
DKH_DEFINE_ERROR(VariantMismatch)
DKH_DEFINE_ERROR(ResourceLimit)
DKH_DEFINE_ERROR(BadBasepoint)
DKH_DEFINE_ERROR(NotDivisible)
DKH_DEFINE_ERROR(S2Mismatch)
DKH_DEFINE_ERROR(DeathOnKnottedComponent)
DKH_DEFINE_ERROR(MultiComponentSaddle)
DKH_DEFINE_ERROR(NotAChainMap)
DKH_DEFINE_ERROR(NotLeftmost)
DKH_DEFINE_ERROR(InvalidMove)
DKH_DEFINE_ERROR(UnknownFixture)
DKH_DEFINE_ERROR(InternalError)

#undef DKH_DEFINE_ERROR

}  // namespace dkh

#endif
