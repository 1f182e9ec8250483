#include "ecc/word.hpp"

#include <algorithm>
#include <bit>

namespace ecc {

Word::Word(unsigned q, std::vector<std::uint8_t> digits) : q_(q), digits_(std::move(digits)) {
    if (q_ < 2) throw InputError("Word: q must be >= 2");
    if (digits_.empty()) throw InputError("Word: empty digit sequence");
    rank_ = 0;
    for (std::uint8_t d : digits_) {
        if (d >= q_) throw InputError("Word: digit out of range for q");
        rank_ = rank_ * q_ + d;
    }
    if (q_ == 2 && digits_.size() <= 64) {
        for (unsigned i = 0; i < digits_.size(); ++i)
            if (digits_[i]) bits_ |= std::uint64_t(1) << i;
    }
}

Word Word::from_rank(unsigned q, unsigned n, std::uint64_t rank) {
    std::vector<std::uint8_t> digits(n);
    for (unsigned i = n; i-- > 0;) {
        digits[i] = static_cast<std::uint8_t>(rank % q);
        rank /= q;
    }
    if (rank != 0) throw InputError("Word::from_rank: rank out of range");
    return Word(q, std::move(digits));
}

std::string Word::str() const {
    std::string s;
    s.reserve(digits_.size());
    for (std::uint8_t d : digits_) s += static_cast<char>('0' + d);
    return s;
}

unsigned hamming_distance(const Word& x, const Word& y) {
    if (x.size() != y.size() || x.q() != y.q())
        throw InputError("hamming_distance: words from different spaces");
    if (x.q() == 2 && x.size() <= 64) return std::popcount(x.bits_ ^ y.bits_);
    unsigned d = 0;
    for (unsigned i = 0; i < x.size(); ++i)
        if (x[i] != y[i]) ++d;
    return d;
}

std::vector<Word> all_words(unsigned q, unsigned n, std::uint64_t budget) {
    Nat total = space_size(q, n);
    if (total > Nat(static_cast<unsigned long>(budget)))
        throw ResourceError("all_words: q^n exceeds enumeration budget");
    std::uint64_t m = total.get_ui();
    std::vector<Word> out;
    out.reserve(m);
    for (std::uint64_t r = 0; r < m; ++r) out.push_back(Word::from_rank(q, n, r));
    return out;
}

namespace {

// Words at distance exactly d from center, appended to out.  Chooses d
// coordinates to change and a non-center symbol for each.
void emit_sphere(const Word& center, unsigned d, std::vector<Word>& out) {
    const unsigned n = center.size();
    const unsigned q = center.q();
    std::vector<unsigned> coords(d);
    std::vector<std::uint8_t> work(center.digits());

    auto assign_symbols = [&](auto&& self, unsigned idx) -> void {
        if (idx == d) {
            out.emplace_back(q, work);
            return;
        }
        unsigned c = coords[idx];
        for (unsigned s = 0; s < q; ++s) {
            if (s == center[c]) continue;
            work[c] = static_cast<std::uint8_t>(s);
            self(self, idx + 1);
        }
        work[c] = center[c];
    };
    auto choose_coords = [&](auto&& self, unsigned idx, unsigned from) -> void {
        if (idx == d) {
            assign_symbols(assign_symbols, 0);
            return;
        }
        for (unsigned c = from; c + (d - idx) <= n; ++c) {
            coords[idx] = c;
            self(self, idx + 1, c + 1);
        }
    };
    choose_coords(choose_coords, 0, 0);
}

}  // namespace

std::vector<Word> enumerate_ball(const Word& center, int r) {
    if (r < 0) throw InputError("enumerate_ball: negative radius");
    unsigned radius = std::min<unsigned>(static_cast<unsigned>(r), center.size());
    std::vector<Word> out;
    for (unsigned d = 0; d <= radius; ++d) {
        std::size_t layer_start = out.size();
        emit_sphere(center, d, out);
        std::sort(out.begin() + static_cast<std::ptrdiff_t>(layer_start), out.end(),
                  [](const Word& a, const Word& b) { return a.rank() < b.rank(); });
    }
    return out;
}

}  // namespace ecc
