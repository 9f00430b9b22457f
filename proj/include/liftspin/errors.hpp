#ifndef LIFTSPIN_ERRORS_HPP
#define LIFTSPIN_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace liftspin
{

// Exit-code class an error maps to at the command line.
enum class ErrorClass { usage, unsupported };

class Error : public std::runtime_error
{
public:
    Error(const std::string &what, ErrorClass cls) : std::runtime_error(what), m_class(cls) {}
    ErrorClass error_class() const noexcept
    {
        return m_class;
    }

private:
    ErrorClass m_class;
};

#define LIFTSPIN_DEFINE_ERROR(Name, Cls)                                                                               \
    class Name : public Error                                                                                          \
    {                                                                                                                  \
    public:                                                                                                            \
        explicit Name(const std::string &what) : Error(#Name ": " + what, ErrorClass::Cls) {}                        \
    };

LIFTSPIN_DEFINE_ERROR(InvalidInput, usage)
LIFTSPIN_DEFINE_ERROR(DivisionByZero, usage)
LIFTSPIN_DEFINE_ERROR(IndexOutOfRange, usage)
LIFTSPIN_DEFINE_ERROR(InvalidPermutation, usage)
LIFTSPIN_DEFINE_ERROR(NonPrime, usage)
LIFTSPIN_DEFINE_ERROR(OutOfConvergenceRegion, usage)
LIFTSPIN_DEFINE_ERROR(UnsupportedWeight, unsupported)
LIFTSPIN_DEFINE_ERROR(EmptySpace, unsupported)
LIFTSPIN_DEFINE_ERROR(InsufficientPrecision, unsupported)
LIFTSPIN_DEFINE_ERROR(IrrationalEigenspace, unsupported)
LIFTSPIN_DEFINE_ERROR(GenusTooLarge, unsupported)

#undef LIFTSPIN_DEFINE_ERROR

} // namespace liftspin

#endif
