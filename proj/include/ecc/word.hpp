#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "ecc/errors.hpp"
#include "ecc/numeric.hpp"

namespace ecc {

// The (q, n, t) triple governing every computation.
struct CodeParams {
    unsigned q = 2;
    unsigned n = 1;
    unsigned t = 0;

    void validate() const {
        if (q < 2) throw InputError("CodeParams: q must be >= 2");
        if (n < 1) throw InputError("CodeParams: n must be >= 1");
        if (t > n) throw InputError("CodeParams: t must be <= n");
    }

    Nat space_size() const { return ecc::space_size(q, n); }
};

// A point of [q]^n with its canonical base-q rank.  digits[0] is the most
// significant coordinate, so rank = sum digits[i] * q^(n-1-i).
class Word {
  public:
    Word(unsigned q, std::vector<std::uint8_t> digits);
    static Word from_rank(unsigned q, unsigned n, std::uint64_t rank);

    unsigned q() const { return q_; }
    unsigned size() const { return static_cast<unsigned>(digits_.size()); }
    std::uint8_t operator[](unsigned i) const { return digits_[i]; }
    const std::vector<std::uint8_t>& digits() const { return digits_; }
    std::uint64_t rank() const { return rank_; }

    // Base-q digit string, most significant coordinate first.
    std::string str() const;

    friend bool operator==(const Word& a, const Word& b) = default;

  private:
    unsigned q_;
    std::vector<std::uint8_t> digits_;
    std::uint64_t rank_;
    std::uint64_t bits_ = 0;  // packed digits when q == 2 and n <= 64

    friend unsigned hamming_distance(const Word& x, const Word& y);
};

// Number of coordinates on which x and y differ.
unsigned hamming_distance(const Word& x, const Word& y);

// All of [q]^n in rank order.  Requires q^n <= budget.
std::vector<Word> all_words(unsigned q, unsigned n, std::uint64_t budget = std::uint64_t(1) << 20);

// The ball B_q(center, r), ordered by (distance from center, rank).
// r > n is clamped to n; r < 0 is an input error (hence the signed parameter).
std::vector<Word> enumerate_ball(const Word& center, int r);

}  // namespace ecc
