#include "qinst/bigint.hpp"

#include <cmath>
#include <cstring>
#include <ostream>
#include <stdexcept>

namespace qinst {

namespace {

// Scratch magnitude buffer: stack storage for the common small case.
struct MagBuf {
    static constexpr uint32_t kStack = 72;
    std::array<uint32_t, kStack> stack;  // intentionally uninitialized
    std::vector<uint32_t> heap;
    uint32_t* p = stack.data();
    uint32_t n = 0;

    explicit MagBuf(uint32_t cap, bool zero_fill) {
        if (cap > kStack) {
            heap.assign(cap, 0);
            p = heap.data();
        } else if (zero_fill) {
            std::memset(p, 0, cap * sizeof(uint32_t));
        }
    }
};

uint32_t trim(const uint32_t* p, uint32_t n) noexcept {
    while (n > 0 && p[n - 1] == 0) --n;
    return n;
}

// out = a + b, out capacity >= max(an,bn)+1
uint32_t add_mag(const uint32_t* a, uint32_t an, const uint32_t* b, uint32_t bn, uint32_t* out) {
    if (an < bn) { std::swap(a, b); std::swap(an, bn); }
    uint64_t carry = 0;
    uint32_t i = 0;
    for (; i < bn; ++i) {
        uint64_t s = uint64_t(a[i]) + b[i] + carry;
        out[i] = uint32_t(s);
        carry = s >> 32;
    }
    for (; i < an; ++i) {
        uint64_t s = uint64_t(a[i]) + carry;
        out[i] = uint32_t(s);
        carry = s >> 32;
    }
    out[i] = uint32_t(carry);
    return trim(out, an + 1);
}

// out = a - b, requires |a| >= |b|
uint32_t sub_mag(const uint32_t* a, uint32_t an, const uint32_t* b, uint32_t bn, uint32_t* out) {
    int64_t borrow = 0;
    uint32_t i = 0;
    for (; i < bn; ++i) {
        int64_t d = int64_t(a[i]) - b[i] - borrow;
        borrow = d < 0;
        out[i] = uint32_t(d + (borrow ? (int64_t(1) << 32) : 0));
    }
    for (; i < an; ++i) {
        int64_t d = int64_t(a[i]) - borrow;
        borrow = d < 0;
        out[i] = uint32_t(d + (borrow ? (int64_t(1) << 32) : 0));
    }
    return trim(out, an);
}

// out = a * b, out zero-initialized with capacity an+bn
uint32_t mul_mag(const uint32_t* a, uint32_t an, const uint32_t* b, uint32_t bn, uint32_t* out) {
    for (uint32_t i = 0; i < an; ++i) {
        uint64_t carry = 0;
        uint64_t ai = a[i];
        for (uint32_t j = 0; j < bn; ++j) {
            uint64_t cur = out[i + j] + ai * b[j] + carry;
            out[i + j] = uint32_t(cur);
            carry = cur >> 32;
        }
        out[i + bn] = uint32_t(carry);
    }
    return trim(out, an + bn);
}

// q = a / d, returns remainder; single-limb divisor d != 0
uint32_t div1_mag(const uint32_t* a, uint32_t an, uint32_t d, uint32_t* q) {
    uint64_t rem = 0;
    for (uint32_t i = an; i-- > 0;) {
        uint64_t cur = (rem << 32) | a[i];
        q[i] = uint32_t(cur / d);
        rem = cur % d;
    }
    return uint32_t(rem);
}

int bit_length(const uint32_t* p, uint32_t n) noexcept {
    if (n == 0) return 0;
    uint32_t top = p[n - 1];
    int bits = 32;
    while (!(top & 0x80000000u)) { top <<= 1; --bits; }
    return int(n - 1) * 32 + bits;
}

bool get_bit(const uint32_t* p, int i) noexcept { return (p[i / 32] >> (i % 32)) & 1u; }

}  // namespace

void BigInt::assign_int64(long long v) {
    big_.clear();
    small_.fill(0);
    if (v == 0) { sign_ = 0; size_ = 0; return; }
    sign_ = v > 0 ? 1 : -1;
    uint64_t mag = v > 0 ? uint64_t(v) : ~uint64_t(v) + 1;  // handles LLONG_MIN
    small_[0] = uint32_t(mag);
    small_[1] = uint32_t(mag >> 32);
    size_ = small_[1] ? 2 : 1;
}

void BigInt::set_mag(int sgn, const uint32_t* p, uint32_t n) {
    n = trim(p, n);
    if (n == 0) { sign_ = 0; size_ = 0; big_.clear(); small_.fill(0); return; }
    sign_ = sgn;
    size_ = n;
    if (n <= kInlineCap) {
        // p may alias big_; copy before clearing
        std::array<uint32_t, kInlineCap> tmp{};
        std::memcpy(tmp.data(), p, n * sizeof(uint32_t));
        big_.clear();
        small_ = tmp;
    } else {
        std::vector<uint32_t> tmp(p, p + n);
        big_ = std::move(tmp);
    }
}

int BigInt::cmp_mag(const uint32_t* a, uint32_t an, const uint32_t* b, uint32_t bn) noexcept {
    if (an != bn) return an < bn ? -1 : 1;
    for (uint32_t i = an; i-- > 0;) {
        if (a[i] != b[i]) return a[i] < b[i] ? -1 : 1;
    }
    return 0;
}

bool BigInt::fits_int64() const noexcept {
    if (size_ > 2) return false;
    if (size_ < 2) return true;
    uint64_t mag = (uint64_t(limbs()[1]) << 32) | limbs()[0];
    return sign_ > 0 ? mag <= uint64_t(INT64_MAX) : mag <= uint64_t(INT64_MAX) + 1;
}

long long BigInt::to_int64() const {
    uint64_t mag = 0;
    if (size_ >= 1) mag = limbs()[0];
    if (size_ >= 2) mag |= uint64_t(limbs()[1]) << 32;
    return sign_ < 0 ? -int64_t(mag) : int64_t(mag);
}

BigInt operator+(const BigInt& a, const BigInt& b) {
    if (a.sign_ == 0) return b;
    if (b.sign_ == 0) return a;
    BigInt r;
    if (a.size_ <= 2 && b.size_ <= 2) {
        // magnitudes fit in uint64; the signed sum fits in 65 bits
        uint64_t am = a.limbs()[0] | (a.size_ > 1 ? uint64_t(a.limbs()[1]) << 32 : 0);
        uint64_t bm = b.limbs()[0] | (b.size_ > 1 ? uint64_t(b.limbs()[1]) << 32 : 0);
        unsigned __int128 mag;
        int sgn;
        if (a.sign_ == b.sign_) {
            mag = (unsigned __int128)am + bm;
            sgn = a.sign_;
        } else if (am >= bm) {
            mag = am - bm;
            sgn = a.sign_;
        } else {
            mag = bm - am;
            sgn = b.sign_;
        }
        if (mag == 0) return r;
        r.sign_ = sgn;
        r.small_[0] = uint32_t(mag);
        r.small_[1] = uint32_t(mag >> 32);
        r.small_[2] = uint32_t(mag >> 64);
        r.size_ = r.small_[2] ? 3 : (r.small_[1] ? 2 : 1);
        return r;
    }
    if (a.sign_ == b.sign_) {
        MagBuf buf(std::max(a.size_, b.size_) + 1, false);
        buf.n = add_mag(a.limbs(), a.size_, b.limbs(), b.size_, buf.p);
        r.set_mag(a.sign_, buf.p, buf.n);
        return r;
    }
    int c = BigInt::cmp_mag(a.limbs(), a.size_, b.limbs(), b.size_);
    if (c == 0) return r;
    MagBuf buf(std::max(a.size_, b.size_), false);
    if (c > 0) {
        buf.n = sub_mag(a.limbs(), a.size_, b.limbs(), b.size_, buf.p);
        r.set_mag(a.sign_, buf.p, buf.n);
    } else {
        buf.n = sub_mag(b.limbs(), b.size_, a.limbs(), a.size_, buf.p);
        r.set_mag(b.sign_, buf.p, buf.n);
    }
    return r;
}

BigInt operator-(const BigInt& a, const BigInt& b) { return a + (-b); }

BigInt BigInt::operator-() const {
    BigInt r = *this;
    r.sign_ = -r.sign_;
    return r;
}

BigInt BigInt::abs() const {
    BigInt r = *this;
    if (r.sign_ < 0) r.sign_ = 1;
    return r;
}

BigInt operator*(const BigInt& a, const BigInt& b) {
    BigInt r;
    if (a.sign_ == 0 || b.sign_ == 0) return r;
    if (a.size_ <= 2 && b.size_ <= 2) {
        uint64_t am = a.limbs()[0] | (a.size_ > 1 ? uint64_t(a.limbs()[1]) << 32 : 0);
        uint64_t bm = b.limbs()[0] | (b.size_ > 1 ? uint64_t(b.limbs()[1]) << 32 : 0);
        unsigned __int128 p = (unsigned __int128)am * bm;
        r.sign_ = a.sign_ * b.sign_;
        r.small_[0] = uint32_t(p);
        r.small_[1] = uint32_t(p >> 32);
        r.small_[2] = uint32_t(p >> 64);
        r.small_[3] = uint32_t(p >> 96);
        uint32_t n = 4;
        while (n > 0 && r.small_[n - 1] == 0) --n;
        r.size_ = n;
        return r;
    }
    MagBuf buf(a.size_ + b.size_, true);
    buf.n = mul_mag(a.limbs(), a.size_, b.limbs(), b.size_, buf.p);
    r.set_mag(a.sign_ * b.sign_, buf.p, buf.n);
    return r;
}

void BigInt::fused_add_mul(const BigInt& a, const BigInt& b) {
    // magnitudes below 2^96 throughout: the signed sum fits __int128 comfortably
    if (a.size_ + b.size_ <= 3 && size_ <= 3) {
        if (a.sign_ == 0 || b.sign_ == 0) return;
        uint64_t am = a.limbs()[0] | (a.size_ > 1 ? uint64_t(a.limbs()[1]) << 32 : 0);
        uint64_t bm = b.limbs()[0] | (b.size_ > 1 ? uint64_t(b.limbs()[1]) << 32 : 0);
        __int128 p = __int128(am) * __int128(bm);
        if (a.sign_ * b.sign_ < 0) p = -p;
        __int128 cur = 0;
        for (uint32_t i = size_; i-- > 0;) cur = (cur << 32) | limbs()[i];
        if (sign_ < 0) cur = -cur;
        cur += p;
        if (cur == 0) { sign_ = 0; size_ = 0; return; }
        int sgn = cur > 0 ? 1 : -1;
        unsigned __int128 mag = cur > 0 ? (unsigned __int128)cur : (unsigned __int128)(-cur);
        big_.clear();
        small_[0] = uint32_t(mag);
        small_[1] = uint32_t(mag >> 32);
        small_[2] = uint32_t(mag >> 64);
        small_[3] = uint32_t(mag >> 96);
        uint32_t n = 4;
        while (n > 0 && small_[n - 1] == 0) --n;
        size_ = n;
        sign_ = sgn;
        return;
    }
    *this = *this + a * b;
}

namespace {

// Binary long division of magnitudes; quotient into q (capacity an), remainder into rem.
void divmod_mag(const uint32_t* a, uint32_t an, const uint32_t* d, uint32_t dn,
                std::vector<uint32_t>& q, std::vector<uint32_t>& rem) {
    q.assign(an, 0);
    rem.assign(dn + 1, 0);
    uint32_t rn = 0;
    for (int i = bit_length(a, an) - 1; i >= 0; --i) {
        // rem = (rem << 1) | bit i of a; rem < d beforehand, so rn stays <= dn+1
        uint32_t carry = get_bit(a, i) ? 1u : 0u;
        for (uint32_t j = 0; j < rn; ++j) {
            uint64_t cur = (uint64_t(rem[j]) << 1) | carry;
            rem[j] = uint32_t(cur);
            carry = uint32_t(cur >> 32);
        }
        if (carry) rem[rn++] = carry;
        rn = trim(rem.data(), rn);
        if (BigInt::cmp_mag(rem.data(), rn, d, dn) >= 0) {
            rn = sub_mag(rem.data(), rn, d, dn, rem.data());
            q[i / 32] |= 1u << (i % 32);
        }
    }
    rem.resize(rn);
}

}  // namespace

BigInt operator/(const BigInt& a, const BigInt& b) {
    if (b.sign_ == 0) throw std::domain_error("BigInt: division by zero");
    BigInt r;
    if (a.sign_ == 0) return r;
    if (BigInt::cmp_mag(a.limbs(), a.size_, b.limbs(), b.size_) < 0) return r;
    if (b.size_ == 1) {
        MagBuf buf(a.size_, false);
        div1_mag(a.limbs(), a.size_, b.limbs()[0], buf.p);
        r.set_mag(a.sign_ * b.sign_, buf.p, a.size_);
        return r;
    }
    std::vector<uint32_t> q, rem;
    divmod_mag(a.limbs(), a.size_, b.limbs(), b.size_, q, rem);
    r.set_mag(a.sign_ * b.sign_, q.data(), uint32_t(q.size()));
    return r;
}

BigInt operator%(const BigInt& a, const BigInt& b) {
    if (b.sign_ == 0) throw std::domain_error("BigInt: division by zero");
    BigInt r;
    if (a.sign_ == 0) return r;
    if (BigInt::cmp_mag(a.limbs(), a.size_, b.limbs(), b.size_) < 0) return a;
    if (b.size_ == 1) {
        MagBuf buf(a.size_, false);
        uint32_t rem = div1_mag(a.limbs(), a.size_, b.limbs()[0], buf.p);
        r.set_mag(a.sign_, &rem, 1);
        return r;
    }
    std::vector<uint32_t> q, rem;
    divmod_mag(a.limbs(), a.size_, b.limbs(), b.size_, q, rem);
    r.set_mag(a.sign_, rem.data(), uint32_t(rem.size()));
    return r;
}

bool operator==(const BigInt& a, const BigInt& b) noexcept {
    return a.sign_ == b.sign_ && a.size_ == b.size_ &&
           std::memcmp(a.limbs(), b.limbs(), a.size_ * sizeof(uint32_t)) == 0;
}

std::strong_ordering operator<=>(const BigInt& a, const BigInt& b) noexcept {
    if (a.sign_ != b.sign_) return a.sign_ <=> b.sign_;
    int c = BigInt::cmp_mag(a.limbs(), a.size_, b.limbs(), b.size_) * a.sign_;
    return c <=> 0;
}

BigInt BigInt::gcd(BigInt a, BigInt b) {
    // Stein's algorithm on int64 when possible, limb-wise otherwise.
    if (a.is_zero()) return b.abs();
    if (b.is_zero()) return a.abs();
    if (a.fits_int64() && b.fits_int64()) {
        unsigned long long x = std::llabs(a.to_int64());
        unsigned long long y = std::llabs(b.to_int64());
        while (y) { unsigned long long t = x % y; x = y; y = t; }
        BigInt r;
        uint32_t l[2] = {uint32_t(x), uint32_t(x >> 32)};
        r.set_mag(1, l, 2);
        return r;
    }
    a = a.abs();
    b = b.abs();
    while (!b.is_zero()) {
        BigInt t = a % b;
        a = b;
        b = t;
    }
    return a;
}

BigInt BigInt::pow_u(unsigned e) const {
    BigInt base = *this, r = 1;
    while (e) {
        if (e & 1) r *= base;
        base *= base;
        e >>= 1;
    }
    return r;
}

BigInt BigInt::from_string(std::string_view s) {
    if (s.empty()) throw std::invalid_argument("BigInt: empty string");
    bool neg = false;
    size_t i = 0;
    if (s[0] == '-' || s[0] == '+') { neg = s[0] == '-'; i = 1; }
    if (i == s.size()) throw std::invalid_argument("BigInt: no digits");
    BigInt r;
    const BigInt chunk_base(1000000000LL);
    size_t pos = i;
    while (pos < s.size()) {
        size_t take = std::min<size_t>(9, s.size() - pos);
        uint32_t v = 0;
        for (size_t j = 0; j < take; ++j) {
            char ch = s[pos + j];
            if (ch < '0' || ch > '9') throw std::invalid_argument("BigInt: bad digit");
            v = v * 10 + uint32_t(ch - '0');
        }
        BigInt scale = (take == 9) ? chunk_base : BigInt(1);
        if (take != 9) {
            long long p = 1;
            for (size_t j = 0; j < take; ++j) p *= 10;
            scale = BigInt(p);
        }
        r = r * scale + BigInt((long long)v);
        pos += take;
    }
    if (neg) r.sign_ = -r.sign_;
    return r;
}

std::string BigInt::to_string() const {
    if (is_zero()) return "0";
    std::vector<uint32_t> work(limbs(), limbs() + size_);
    uint32_t n = size_;
    std::string out;
    while (n > 0) {
        uint32_t rem = div1_mag(work.data(), n, 1000000000u, work.data());
        n = trim(work.data(), n);
        char buf[16];
        if (n > 0) {
            std::snprintf(buf, sizeof buf, "%09u", rem);
        } else {
            std::snprintf(buf, sizeof buf, "%u", rem);
        }
        out.insert(0, buf);
    }
    if (sign_ < 0) out.insert(0, "-");
    return out;
}

double BigInt::to_double() const {
    if (is_zero()) return 0.0;
    double m = 0.0;
    uint32_t hi = size_;
    uint32_t lo = hi > 3 ? hi - 3 : 0;
    for (uint32_t i = hi; i-- > lo;) m = m * 4294967296.0 + limbs()[i];
    double r = std::ldexp(m, int(lo) * 32);
    return sign_ < 0 ? -r : r;
}

std::ostream& operator<<(std::ostream& os, const BigInt& v) { return os << v.to_string(); }

}  // namespace qinst
