#ifndef HCSCK_ERRORS_HPP
#define HCSCK_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace hcsck {

// Base class for all library errors. Subclasses correspond to the failure
// modes of the individual modules so callers can catch them selectively.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

#define HCSCK_DEFINE_ERROR(Name)                                         \
    class Name : public Error {                                          \
    public:                                                              \
        explicit Name(const std::string& what) : Error(#Name ": " + what) {} \
    }

// polytope
HCSCK_DEFINE_ERROR(NotBounded);
HCSCK_DEFINE_ERROR(NotDelzant);
HCSCK_DEFINE_ERROR(NonPrimitiveNormal);
HCSCK_DEFINE_ERROR(RedundantFacet);
HCSCK_DEFINE_ERROR(BoundaryEvaluation);

// spectral
HCSCK_DEFINE_ERROR(UnknownSpectralFunction);
HCSCK_DEFINE_ERROR(DomainExceeded);

// operator / solver
HCSCK_DEFINE_ERROR(NotConvex);
HCSCK_DEFINE_ERROR(StencilLeavesPolytope);
HCSCK_DEFINE_ERROR(LineSearchFailure);
HCSCK_DEFINE_ERROR(NotSolvable);
HCSCK_DEFINE_ERROR(FutakiObstruction);
HCSCK_DEFINE_ERROR(RootBracketFailure);

// stability
HCSCK_DEFINE_ERROR(SingularGram);

// siegel
HCSCK_DEFINE_ERROR(NotCompatible);
HCSCK_DEFINE_ERROR(SqrtNotSymplectic);
HCSCK_DEFINE_ERROR(SingularDenominator);
HCSCK_DEFINE_ERROR(NotTangent);
HCSCK_DEFINE_ERROR(NotBaseTangent);
HCSCK_DEFINE_ERROR(DegenerateSpectrum);

// cli
HCSCK_DEFINE_ERROR(ConfigError);

#undef HCSCK_DEFINE_ERROR

} // namespace hcsck

#endif
