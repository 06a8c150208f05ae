#include "tspread/bigint.hpp"

#include <algorithm>
#include <stdexcept>

namespace tspread {

namespace {
constexpr std::uint64_t kBase = 1ull << 32;
}

BigInt::BigInt(long long v) {
    if (v == 0) return;
    sign_ = v < 0 ? -1 : 1;
    unsigned long long m = v < 0 ? 0ull - static_cast<unsigned long long>(v)
                                 : static_cast<unsigned long long>(v);
    while (m) {
        limbs_.push_back(static_cast<std::uint32_t>(m & 0xffffffffu));
        m >>= 32;
    }
}

void BigInt::trim() {
    while (!limbs_.empty() && limbs_.back() == 0) limbs_.pop_back();
}

int BigInt::cmp_mag(const std::vector<std::uint32_t>& a, const std::vector<std::uint32_t>& b) {
    if (a.size() != b.size()) return a.size() < b.size() ? -1 : 1;
    for (std::size_t i = a.size(); i-- > 0;)
        if (a[i] != b[i]) return a[i] < b[i] ? -1 : 1;
    return 0;
}

std::vector<std::uint32_t> BigInt::add_mag(const std::vector<std::uint32_t>& a,
                                           const std::vector<std::uint32_t>& b) {
    std::vector<std::uint32_t> r;
    r.reserve(std::max(a.size(), b.size()) + 1);
    std::uint64_t carry = 0;
    for (std::size_t i = 0; i < a.size() || i < b.size() || carry; ++i) {
        std::uint64_t s = carry;
        if (i < a.size()) s += a[i];
        if (i < b.size()) s += b[i];
        r.push_back(static_cast<std::uint32_t>(s & 0xffffffffu));
        carry = s >> 32;
    }
    return r;
}

// requires |a| >= |b|
std::vector<std::uint32_t> BigInt::sub_mag(const std::vector<std::uint32_t>& a,
                                           const std::vector<std::uint32_t>& b) {
    std::vector<std::uint32_t> r(a);
    std::int64_t borrow = 0;
    for (std::size_t i = 0; i < r.size(); ++i) {
        std::int64_t s = static_cast<std::int64_t>(r[i]) - borrow - (i < b.size() ? b[i] : 0);
        if (s < 0) {
            s += static_cast<std::int64_t>(kBase);
            borrow = 1;
        } else {
            borrow = 0;
        }
        r[i] = static_cast<std::uint32_t>(s);
    }
    while (!r.empty() && r.back() == 0) r.pop_back();
    return r;
}

std::vector<std::uint32_t> BigInt::mul_mag(const std::vector<std::uint32_t>& a,
                                           const std::vector<std::uint32_t>& b) {
    if (a.empty() || b.empty()) return {};
    std::vector<std::uint32_t> r(a.size() + b.size(), 0);
    for (std::size_t i = 0; i < a.size(); ++i) {
        std::uint64_t carry = 0;
        for (std::size_t j = 0; j < b.size(); ++j) {
            std::uint64_t cur = static_cast<std::uint64_t>(a[i]) * b[j] + r[i + j] + carry;
            r[i + j] = static_cast<std::uint32_t>(cur & 0xffffffffu);
            carry = cur >> 32;
        }
        std::size_t k = i + b.size();
        while (carry) {
            std::uint64_t cur = r[k] + carry;
            r[k] = static_cast<std::uint32_t>(cur & 0xffffffffu);
            carry = cur >> 32;
            ++k;
        }
    }
    while (!r.empty() && r.back() == 0) r.pop_back();
    return r;
}

// Knuth algorithm D on 32-bit limbs.
std::vector<std::uint32_t> BigInt::divmod_mag(const std::vector<std::uint32_t>& a,
                                              const std::vector<std::uint32_t>& b,
                                              std::vector<std::uint32_t>& rem) {
    if (b.empty()) throw std::logic_error("BigInt: division by zero");
    if (cmp_mag(a, b) < 0) {
        rem = a;
        return {};
    }
    if (b.size() == 1) {
        std::vector<std::uint32_t> q(a.size());
        std::uint64_t r = 0;
        for (std::size_t i = a.size(); i-- > 0;) {
            std::uint64_t cur = (r << 32) | a[i];
            q[i] = static_cast<std::uint32_t>(cur / b[0]);
            r = cur % b[0];
        }
        while (!q.empty() && q.back() == 0) q.pop_back();
        rem.clear();
        if (r) rem.push_back(static_cast<std::uint32_t>(r));
        return q;
    }

    // normalize so that the divisor's top limb has its high bit set
    int shift = 0;
    for (std::uint32_t top = b.back(); !(top & 0x80000000u); top <<= 1) ++shift;
    auto shl = [&](const std::vector<std::uint32_t>& v) {
        std::vector<std::uint32_t> r2(v.size() + 1, 0);
        for (std::size_t i = 0; i < v.size(); ++i) {
            r2[i] |= static_cast<std::uint32_t>((static_cast<std::uint64_t>(v[i]) << shift) & 0xffffffffu);
            r2[i + 1] = static_cast<std::uint32_t>((static_cast<std::uint64_t>(v[i]) << shift) >> 32);
        }
        while (!r2.empty() && r2.back() == 0) r2.pop_back();
        return r2;
    };
    std::vector<std::uint32_t> u = shl(a), v = shl(b);
    const std::size_t n = v.size(), m = u.size() - n;
    u.resize(u.size() + 1, 0);
    std::vector<std::uint32_t> q(m + 1, 0);

    for (std::size_t j = m + 1; j-- > 0;) {
        std::uint64_t num = (static_cast<std::uint64_t>(u[j + n]) << 32) | u[j + n - 1];
        std::uint64_t qhat = num / v[n - 1];
        std::uint64_t rhat = num % v[n - 1];
        while (qhat >= kBase ||
               qhat * v[n - 2] > ((rhat << 32) | u[j + n - 2])) {
            --qhat;
            rhat += v[n - 1];
            if (rhat >= kBase) break;
        }
        // u[j..j+n] -= qhat * v
        std::int64_t borrow = 0;
        std::uint64_t carry = 0;
        for (std::size_t i = 0; i < n; ++i) {
            std::uint64_t p = qhat * v[i] + carry;
            carry = p >> 32;
            std::int64_t t = static_cast<std::int64_t>(u[i + j]) - borrow -
                             static_cast<std::int64_t>(p & 0xffffffffu);
            if (t < 0) {
                t += static_cast<std::int64_t>(kBase);
                borrow = 1;
            } else {
                borrow = 0;
            }
            u[i + j] = static_cast<std::uint32_t>(t);
        }
        std::int64_t t = static_cast<std::int64_t>(u[j + n]) - borrow -
                         static_cast<std::int64_t>(carry);
        if (t < 0) {
            // qhat was one too large: add divisor back
            t += static_cast<std::int64_t>(kBase);
            --qhat;
            std::uint64_t c2 = 0;
            for (std::size_t i = 0; i < n; ++i) {
                std::uint64_t s = static_cast<std::uint64_t>(u[i + j]) + v[i] + c2;
                u[i + j] = static_cast<std::uint32_t>(s & 0xffffffffu);
                c2 = s >> 32;
            }
            t += static_cast<std::int64_t>(c2);
            t &= 0xffffffffll;
        }
        u[j + n] = static_cast<std::uint32_t>(t);
        q[j] = static_cast<std::uint32_t>(qhat);
    }

    while (!q.empty() && q.back() == 0) q.pop_back();
    // denormalize remainder
    u.resize(n);
    rem.assign(n, 0);
    for (std::size_t i = 0; i < n; ++i) {
        std::uint64_t lo = u[i] >> shift;
        std::uint64_t hi = (i + 1 < n && shift) ? (static_cast<std::uint64_t>(u[i + 1]) << (32 - shift)) : 0;
        rem[i] = static_cast<std::uint32_t>((lo | hi) & 0xffffffffu);
    }
    while (!rem.empty() && rem.back() == 0) rem.pop_back();
    return q;
}

BigInt BigInt::operator-() const {
    BigInt r = *this;
    r.sign_ = -r.sign_;
    return r;
}

BigInt BigInt::operator+(const BigInt& o) const {
    if (is_zero()) return o;
    if (o.is_zero()) return *this;
    BigInt r;
    if (sign_ == o.sign_) {
        r.sign_ = sign_;
        r.limbs_ = add_mag(limbs_, o.limbs_);
    } else {
        int c = cmp_mag(limbs_, o.limbs_);
        if (c == 0) return BigInt();
        if (c > 0) {
            r.sign_ = sign_;
            r.limbs_ = sub_mag(limbs_, o.limbs_);
        } else {
            r.sign_ = o.sign_;
            r.limbs_ = sub_mag(o.limbs_, limbs_);
        }
    }
    return r;
}

BigInt BigInt::operator-(const BigInt& o) const { return *this + (-o); }

BigInt BigInt::operator*(const BigInt& o) const {
    if (is_zero() || o.is_zero()) return BigInt();
    BigInt r;
    r.sign_ = sign_ * o.sign_;
    r.limbs_ = mul_mag(limbs_, o.limbs_);
    return r;
}

BigInt BigInt::div_exact(const BigInt& o) const {
    if (o.is_zero()) throw std::logic_error("BigInt: division by zero");
    if (is_zero()) return BigInt();
    std::vector<std::uint32_t> rem;
    BigInt q;
    q.limbs_ = divmod_mag(limbs_, o.limbs_, rem);
    if (!rem.empty()) throw std::logic_error("BigInt: inexact division");
    q.sign_ = sign_ * o.sign_;
    if (q.limbs_.empty()) q.sign_ = 1;
    return q;
}

bool BigInt::operator==(const BigInt& o) const {
    if (limbs_.empty() && o.limbs_.empty()) return true;
    return sign_ == o.sign_ && limbs_ == o.limbs_;
}

bool BigInt::fits_ll() const {
    if (limbs_.size() > 2) return false;
    if (limbs_.size() < 2) return true;
    std::uint64_t m = (static_cast<std::uint64_t>(limbs_[1]) << 32) | limbs_[0];
    if (sign_ > 0) return m <= 0x7fffffffffffffffull;
    return m <= 0x8000000000000000ull;
}

long long BigInt::to_ll() const {
    if (!fits_ll()) throw std::overflow_error("BigInt: does not fit long long");
    std::uint64_t m = 0;
    if (limbs_.size() >= 1) m |= limbs_[0];
    if (limbs_.size() == 2) m |= static_cast<std::uint64_t>(limbs_[1]) << 32;
    if (limbs_.empty()) return 0;
    return sign_ > 0 ? static_cast<long long>(m) : -static_cast<long long>(m - 1) - 1;
}

std::string BigInt::to_string() const {
    if (is_zero()) return "0";
    std::vector<std::uint32_t> cur = limbs_;
    std::string digits;
    std::vector<std::uint32_t> ten = {10u};
    while (!cur.empty()) {
        std::vector<std::uint32_t> rem;
        cur = divmod_mag(cur, ten, rem);
        digits.push_back(static_cast<char>('0' + (rem.empty() ? 0 : rem[0])));
    }
    if (sign_ < 0) digits.push_back('-');
    std::reverse(digits.begin(), digits.end());
    return digits;
}

}  // namespace tspread
