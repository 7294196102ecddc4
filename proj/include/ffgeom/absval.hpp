#pragma once

#include <string>

#include "ffgeom/errors.hpp"

namespace ffgeom {

/// Value of the non-archimedean absolute value: either 0 or q^e with e an
/// integer. Zero is below every power; multiplication adds exponents and
/// zero absorbs.
class AbsValue {
public:
    static AbsValue zero() { return AbsValue(true, 0); }
    static AbsValue power(int e) { return AbsValue(false, e); }
    static AbsValue one() { return AbsValue(false, 0); }

    bool is_zero() const { return zero_; }

    int exponent() const {
        if (zero_) throw ZeroInput();
        return e_;
    }

    AbsValue operator*(const AbsValue& o) const {
        if (zero_ || o.zero_) return zero();
        return power(e_ + o.e_);
    }

    friend bool operator==(const AbsValue& a, const AbsValue& b) {
        return a.zero_ == b.zero_ && (a.zero_ || a.e_ == b.e_);
    }
    friend bool operator!=(const AbsValue& a, const AbsValue& b) { return !(a == b); }
    friend bool operator<(const AbsValue& a, const AbsValue& b) {
        if (a.zero_) return !b.zero_;
        if (b.zero_) return false;
        return a.e_ < b.e_;
    }
    friend bool operator>(const AbsValue& a, const AbsValue& b) { return b < a; }
    friend bool operator<=(const AbsValue& a, const AbsValue& b) { return !(b < a); }
    friend bool operator>=(const AbsValue& a, const AbsValue& b) { return !(a < b); }

    /// "0" or "q^e"; the exact exponent form used by all text output.
    std::string str() const {
        if (zero_) return "0";
        return "q^" + std::to_string(e_);
    }

private:
    AbsValue(bool z, int e) : zero_(z), e_(e) {}
    bool zero_;
    int e_;
};

}  // namespace ffgeom
