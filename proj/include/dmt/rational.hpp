#pragma once

#include <cstdint>
#include <functional>
#include <numeric>
#include <optional>
#include <stdexcept>
#include <string>

namespace dmt {

/// Exact rational cell value. The theory is purely order based, so all
/// comparisons are exact; no floating point anywhere.
class Rat {
public:
    Rat() : num_(0), den_(1) {}
    Rat(long long n) : num_(n), den_(1) {}
    Rat(long long n, long long d) : num_(n), den_(d) { normalize(); }

    long long num() const { return num_; }
    long long den() const { return den_; }
    bool is_integer() const { return den_ == 1; }

    // Accepts "p" or "p/q".
    static std::optional<Rat> parse(const std::string& s) {
        if (s.empty()) return std::nullopt;
        auto slash = s.find('/');
        try {
            size_t pos = 0;
            if (slash == std::string::npos) {
                long long n = std::stoll(s, &pos);
                if (pos != s.size()) return std::nullopt;
                return Rat(n);
            }
            long long n = std::stoll(s.substr(0, slash), &pos);
            if (pos != slash) return std::nullopt;
            long long d = std::stoll(s.substr(slash + 1), &pos);
            if (pos != s.size() - slash - 1) return std::nullopt;
            if (d == 0) return std::nullopt;
            return Rat(n, d);
        } catch (const std::exception&) {
            return std::nullopt;
        }
    }

    std::string str() const {
        if (den_ == 1) return std::to_string(num_);
        return std::to_string(num_) + "/" + std::to_string(den_);
    }

    friend bool operator==(const Rat& a, const Rat& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }
    friend bool operator!=(const Rat& a, const Rat& b) { return !(a == b); }
    friend bool operator<(const Rat& a, const Rat& b) {
        return static_cast<__int128>(a.num_) * b.den_ <
               static_cast<__int128>(b.num_) * a.den_;
    }
    friend bool operator>(const Rat& a, const Rat& b) { return b < a; }
    friend bool operator<=(const Rat& a, const Rat& b) { return !(b < a); }
    friend bool operator>=(const Rat& a, const Rat& b) { return !(a < b); }

private:
    void normalize() {
        if (den_ == 0) throw std::invalid_argument("rational with zero denominator");
        if (den_ < 0) { num_ = -num_; den_ = -den_; }
        long long g = std::gcd(num_ < 0 ? -num_ : num_, den_);
        if (g > 1) { num_ /= g; den_ /= g; }
        if (num_ == 0) den_ = 1;
    }

    long long num_;
    long long den_;
};

}  // namespace dmt

template <>
struct std::hash<dmt::Rat> {
    size_t operator()(const dmt::Rat& r) const {
        return std::hash<long long>()(r.num()) * 1000003u ^
               std::hash<long long>()(r.den());
    }
};
