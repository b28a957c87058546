#pragma once

#include <cstdint>
#include <functional>
#include <set>
#include <string>
#include <vector>

#include "gmak/rational.hpp"

namespace gmak {

/// Element of {-,0,+}^d. Entries are -1, 0, +1.
class SignVec {
public:
    SignVec() = default;
    explicit SignVec(int dim) : e_(dim, 0) {}
    explicit SignVec(std::vector<int8_t> e) : e_(std::move(e)) {}

    static SignVec of(const std::vector<Rat>& x);

    int dim() const { return int(e_.size()); }
    int8_t operator[](int i) const { return e_[i]; }
    int8_t& operator[](int i) { return e_[i]; }

    bool is_zero() const;
    SignVec negate() const;
    /// Componentwise (Hadamard) product.
    SignVec product(const SignVec& o) const;
    /// Partial order induced by 0 < - and 0 < +.
    bool leq(const SignVec& o) const;
    /// Orthogonality: products all zero, or both a - and a + among them.
    bool orthogonal(const SignVec& o) const;

    bool operator==(const SignVec& o) const { return e_ == o.e_; }
    bool operator<(const SignVec& o) const { return e_ < o.e_; }

    std::string to_string() const; // e.g. "(+,0,-)"

private:
    std::vector<int8_t> e_;
};

enum class ClosureMode { Lower, Upper, Total };

/// Finite set of sign vectors of a common ambient dimension.
struct SignSet {
    int dim = 0;
    std::set<SignVec> members;

    bool contains(const SignVec& v) const { return members.count(v) > 0; }
    bool subset_of(const SignSet& o) const;
    SignSet intersect(const SignSet& o) const;
    bool insert(const SignVec& v) { return members.insert(v).second; }
    size_t size() const { return members.size(); }
};

/// Lower / upper / total closure. Upper and total closures range over
/// nonzero generators only.
SignSet closure(const SignSet& s, ClosureMode mode);

/// All 3^d sign vectors (test-scale dimensions only).
std::vector<SignVec> all_sign_vectors(int dim);

} // namespace gmak
