#include "ppl/family.hpp"

#include <cctype>

#include "ppl/errors.hpp"

namespace ppl {

struct FactorFamily::Impl {
  std::vector<FactorInfo> factors;
  long long n = 0;
  bool strict = true;
};

namespace {

bool valid_name(const std::string& s) {
  if (s.empty()) return false;
  for (char c : s) {
    if (std::isspace(static_cast<unsigned char>(c)) || c == ':' || c == '^' ||
        c == '#' || c == '"') {
      return false;
    }
  }
  return true;
}

}  // namespace

FactorFamily::FactorFamily(std::shared_ptr<const Impl> impl)
    : impl_(std::move(impl)) {}

FactorFamily::FactorFamily(std::vector<FactorInfo> factors, long long n,
                           bool strict) {
  if (factors.size() < 2) {
    fail(ErrorCode::InvalidFamily, "a product needs at least two factors");
  }
  for (std::size_t i = 0; i < factors.size(); ++i) {
    if (!factors[i].group) {
      fail(ErrorCode::InvalidFamily, "missing factor group");
    }
    if (!valid_name(factors[i].name)) {
      fail(ErrorCode::InvalidFamily, "bad factor name: " + factors[i].name);
    }
    if (factors[i].group->order() < 2) {
      fail(ErrorCode::InvalidFamily,
           "factor " + factors[i].name + " is trivial");
    }
    for (std::size_t j = 0; j < i; ++j) {
      if (factors[j].name == factors[i].name) {
        fail(ErrorCode::InvalidFamily,
             "duplicate factor name: " + factors[i].name);
      }
    }
  }
  if (n < 1) {
    fail(ErrorCode::InvalidFamily, "exponent n must be positive");
  }
  if (strict && (n < 665 || n % 2 == 0)) {
    fail(ErrorCode::StrictViolation,
         "strict mode requires an odd exponent n >= 665, got " +
             std::to_string(n));
  }
  auto impl = std::make_shared<Impl>();
  impl->factors = std::move(factors);
  impl->n = n;
  impl->strict = strict;
  impl_ = std::move(impl);
}

int FactorFamily::factor_count() const { return int(impl_->factors.size()); }

const GroupPtr& FactorFamily::factor(int i) const {
  if (i < 0 || i >= factor_count()) {
    fail(ErrorCode::BadReference, "factor index out of range");
  }
  return impl_->factors[i].group;
}

const std::string& FactorFamily::factor_name(int i) const {
  if (i < 0 || i >= factor_count()) {
    fail(ErrorCode::BadReference, "factor index out of range");
  }
  return impl_->factors[i].name;
}

int FactorFamily::factor_index(std::string_view name) const {
  for (int i = 0; i < factor_count(); ++i) {
    if (impl_->factors[i].name == name) return i;
  }
  return -1;
}

long long FactorFamily::n() const { return impl_->n; }
bool FactorFamily::strict() const { return impl_->strict; }

bool FactorFamily::same_family(const FactorFamily& other) const {
  return impl_.get() == other.impl_.get();
}

bool FactorFamily::n_in_theorem_range() const {
  return impl_->n >= 665 && impl_->n % 2 == 1;
}

bool FactorFamily::involution_free() const {
  for (const auto& f : impl_->factors) {
    if (!f.group->involutions().empty()) return false;
  }
  return true;
}

FactorFamily FactorFamily::replace_factor(const FactorFamily& base, int i,
                                          GroupPtr replacement) {
  if (i < 0 || i >= base.factor_count()) {
    fail(ErrorCode::BadReference, "factor index out of range");
  }
  auto impl = std::make_shared<Impl>(*base.impl_);
  impl->factors[i].group = std::move(replacement);
  return FactorFamily(std::shared_ptr<const Impl>(std::move(impl)));
}

}  // namespace ppl
