#ifndef FPINV_VERSION_HPP
#define FPINV_VERSION_HPP

namespace fpinv {

inline constexpr const char* kToolName = "fpinv";
inline constexpr const char* kVersion = "0.1.0";

}  // namespace fpinv

#endif  // FPINV_VERSION_HPP
