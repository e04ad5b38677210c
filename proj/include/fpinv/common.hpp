#ifndef FPINV_COMMON_HPP
#define FPINV_COMMON_HPP

#include <chrono>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace fpinv {

// Error taxonomy, mirrored by the CLI exit codes:
//   ParseError        -> exit 2 (malformed input, carries a location)
//   PreconditionError -> exit 3 (well-formed input outside an operation's domain)
//   ResourceCapError  -> exit 4 (configured cap exceeded; partial data may be attached)
class FpinvError : public std::runtime_error {
 public:
  explicit FpinvError(const std::string& msg) : std::runtime_error(msg) {}
};

class ParseError : public FpinvError {
 public:
  ParseError(const std::string& msg, std::size_t offset)
      : FpinvError(msg), offset_(offset) {}
  // Byte offset into the source text at which the problem was detected.
  std::size_t offset() const { return offset_; }

 private:
  std::size_t offset_;
};

class PreconditionError : public FpinvError {
 public:
  using FpinvError::FpinvError;
};

class ResourceCapError : public FpinvError {
 public:
  explicit ResourceCapError(const std::string& msg, std::string partial = {})
      : FpinvError(msg), partial_(std::move(partial)) {}
  // Serialized partial result, when one could be reported soundly.
  const std::string& partial() const { return partial_; }

 private:
  std::string partial_;
};

// Checked narrowing/arithmetic helpers used by the exact-arithmetic layers.
inline std::int64_t checked_add(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_add_overflow(a, b, &r))
    throw ResourceCapError("integer overflow in exact arithmetic");
  return r;
}

inline std::int64_t checked_sub(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_sub_overflow(a, b, &r))
    throw ResourceCapError("integer overflow in exact arithmetic");
  return r;
}

inline std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_mul_overflow(a, b, &r))
    throw ResourceCapError("integer overflow in exact arithmetic");
  return r;
}

// p^e as int64, guarded. Levels that overflow 63 bits are far beyond desk scale.
inline std::int64_t checked_pow(std::int64_t base, unsigned exp) {
  std::int64_t r = 1;
  for (unsigned i = 0; i < exp; ++i) r = checked_mul(r, base);
  return r;
}

// Wall-clock cap for long-running scans.  Passed by pointer through the
// compute layers; a null deadline means "no cap".
class Deadline {
 public:
  explicit Deadline(double seconds)
      : at_(std::chrono::steady_clock::now() +
            std::chrono::duration_cast<std::chrono::steady_clock::duration>(
                std::chrono::duration<double>(seconds))) {}

  void check(const char* where) const {
    if (std::chrono::steady_clock::now() > at_)
      throw ResourceCapError(std::string("time cap exceeded during ") + where);
  }

 private:
  std::chrono::steady_clock::time_point at_;
};

inline void check_deadline(const Deadline* dl, const char* where) {
  if (dl) dl->check(where);
}

}  // namespace fpinv

#endif  // FPINV_COMMON_HPP
