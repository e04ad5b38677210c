#ifndef FPINV_CONTEXT_HPP
#define FPINV_CONTEXT_HPP

#include <cctype>
#include <memory>
#include <string>
#include <vector>

#include "fpinv/common.hpp"
#include "fpinv/fp.hpp"
#include "fpinv/monomial.hpp"

namespace fpinv {

inline bool is_valid_identifier(const std::string& s) {
  if (s.empty()) return false;
  if (!std::isalpha(static_cast<unsigned char>(s[0]))) return false;
  for (char c : s)
    if (!std::isalnum(static_cast<unsigned char>(c)) && c != '_') return false;
  return true;
}

// Ambient ring data: ordered variable names, the prime, and the monomial
// order used for canonical forms.  Shared immutably by polynomials/ideals.
class VariableContext {
 public:
  VariableContext(std::vector<std::string> names, PrimeModulus p,
                  MonomialOrder order = MonomialOrder::grevlex)
      : names_(std::move(names)), p_(p), order_(order) {
    if (names_.empty())
      throw PreconditionError("variable context needs at least one variable");
    if (names_.size() > kMaxVariables)
      throw PreconditionError("at most " + std::to_string(kMaxVariables) +
                              " variables are supported");
    for (std::size_t i = 0; i < names_.size(); ++i) {
      if (!is_valid_identifier(names_[i]))
        throw PreconditionError("invalid variable name: '" + names_[i] + "'");
      for (std::size_t j = 0; j < i; ++j)
        if (names_[i] == names_[j])
          throw PreconditionError("duplicate variable name: '" + names_[i] +
                                  "'");
    }
  }

  std::size_t nvars() const { return names_.size(); }
  const std::vector<std::string>& names() const { return names_; }
  const PrimeModulus& prime() const { return p_; }
  std::uint32_t p() const { return p_.value(); }
  MonomialOrder order() const { return order_; }

  // Index of a variable name, or npos.
  static constexpr std::size_t npos = static_cast<std::size_t>(-1);
  std::size_t var_index(const std::string& name) const {
    for (std::size_t i = 0; i < names_.size(); ++i)
      if (names_[i] == name) return i;
    return npos;
  }

  friend bool operator==(const VariableContext& a, const VariableContext& b) {
    return a.names_ == b.names_ && a.p_ == b.p_ && a.order_ == b.order_;
  }
  friend bool operator!=(const VariableContext& a, const VariableContext& b) {
    return !(a == b);
  }

 private:
  std::vector<std::string> names_;
  PrimeModulus p_;
  MonomialOrder order_;
};

using ContextPtr = std::shared_ptr<const VariableContext>;

inline ContextPtr make_context(std::vector<std::string> names, std::uint32_t p,
                               MonomialOrder order = MonomialOrder::grevlex) {
  return std::make_shared<const VariableContext>(std::move(names),
                                                 PrimeModulus(p), order);
}

inline void require_same_context(const ContextPtr& a, const ContextPtr& b) {
  if (a == b) return;
  if (!a || !b || *a != *b)
    throw PreconditionError("operands come from different variable contexts");
}

}  // namespace fpinv

#endif  // FPINV_CONTEXT_HPP
