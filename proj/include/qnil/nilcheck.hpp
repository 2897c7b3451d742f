#pragma once

/**
 * @file nilcheck.hpp
 * @brief Graded dimensions of K<X>/I for a quadratic presentation.
 *
 * The degree-m component of the ideal is spanned by the words u f v with f a
 * relation and |u| + |v| = m - 2, so
 *
 *     dim R_m = n^m - rank{ u f v }.
 *
 * Degree-m words are indexed in base-n lexicographic order. Rows are fed in
 * (relation, |u|, u, v) order into a sparse semi-echelon reducer: each kept
 * row owns a distinct leading column. Over the rationals rows stay primitive
 * integer vectors (fraction-free), over GF(p) pivots are scaled to lead 1.
 *
 * The default method never builds the n^m word columns: it works in
 * R_{m-1} (x) X and carries normal forms up from degree to degree. The
 * full-word methods are kept as independent cross-checks.
 */

#include "qnil/gs_series.hpp"
#include "qnil/numeric.hpp"
#include "qnil/presentation.hpp"

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <limits>
#include <mutex>
#include <optional>
#include <sstream>
#include <string>
#include <type_traits>
#include <utility>
#include <vector>

namespace qnil {

inline constexpr std::uint64_t default_column_cap = 200'000;

namespace detail {

struct mod_p_arith {
    using coeff = std::uint64_t;
    std::uint64_t p;

    coeff from(const big_int& v) const {
        big_int r = v % p;
        if (r < 0) r += p;
        return static_cast<coeff>(r);
    }
    static bool zero(coeff c) { return c == 0; }
    coeff mul(coeff a, coeff b) const { return a * b % p; }
    coeff sub(coeff a, coeff b) const { return a >= b ? a - b : a + p - b; }
    coeff add(coeff a, coeff b) const { return sub(a, sub(0, b)); }
    coeff inverse(coeff a) const {
        // a^(p-2)
        coeff result = 1, base = a;
        for (std::uint64_t e = p - 2; e; e >>= 1) {
            if (e & 1) result = mul(result, base);
            base = mul(base, base);
        }
        return result;
    }
};

struct rational_arith {
    using coeff = big_int;

    static coeff from(const big_int& v) { return v; }
    static bool zero(const coeff& c) { return c == 0; }
    static coeff mul(const coeff& a, const coeff& b) { return a * b; }
    static coeff sub(const coeff& a, const coeff& b) { return a - b; }
    static coeff add(const coeff& a, const coeff& b) { return a + b; }
};

template <class Arith>
class sparse_echelon {
public:
    using coeff = typename Arith::coeff;
    struct entry {
        std::uint64_t col;
        coeff value;
    };
    using row = std::vector<entry>;

    sparse_echelon(Arith arith, std::uint64_t columns)
        : arith_(std::move(arith)), columns_(columns), pivot_of_(columns, none) {}

    std::uint64_t rank() const { return pivots_.size(); }
    bool full() const { return pivots_.size() == columns_; }
    const std::vector<row>& rows() const { return pivots_; }

    // Reduces r against the stored pivots; keeps it if it survives.
    bool insert(row r) {
        while (!r.empty()) {
            const std::size_t piv = pivot_of_[r.front().col];
            if (piv == none) {
                normalize(r);
                pivot_of_[r.front().col] = pivots_.size();
                pivots_.push_back(std::move(r));
                return true;
            }
            r = eliminate(r, pivots_[piv]);
        }
        return false;
    }

    // Clears every pivot column outside each row's own lead (reduced echelon form).
    void reduce_fully() {
        std::vector<std::size_t> order(pivots_.size());
        for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
        std::sort(order.begin(), order.end(),
                  [&](std::size_t a, std::size_t b) { return pivots_[a].front().col > pivots_[b].front().col; });
        for (std::size_t idx : order) {
            row& r = pivots_[idx];
            for (std::size_t i = 1; i < r.size();) {
                const std::size_t piv = pivot_of_[r[i].col];
                if (piv == none) {
                    ++i;
                    continue;
                }
                const coeff rc = r[i].value;
                r = eliminate(r, pivots_[piv], rc);
            }
        }
    }

    // index of the stored row leading at col, or none
    std::size_t pivot_row(std::uint64_t col) const { return pivot_of_[col]; }

    static constexpr std::size_t none = std::numeric_limits<std::size_t>::max();

private:

    void normalize(row& r) const {
        if constexpr (std::is_same_v<Arith, mod_p_arith>) {
            const coeff inv = arith_.inverse(r.front().value);
            for (auto& e : r) e.value = arith_.mul(e.value, inv);
        } else {
            big_int g = 0;
            for (const auto& e : r)
                if ((g = boost::multiprecision::gcd(g, e.value)) == 1) break;
            if (r.front().value < 0) g = -g;
            if (g != 1)
                for (auto& e : r) e.value /= g;
        }
    }

    row eliminate(const row& r, const row& pivot) const { return eliminate(r, pivot, r.front().value); }

    // a * r - b * pivot, cancelling the entry rc of r in the pivot's lead column
    row eliminate(const row& r, const row& pivot, const coeff& rc) const {
        coeff a, b;
        if constexpr (std::is_same_v<Arith, mod_p_arith>) {
            a = 1;
            b = rc;  // pivot lead is 1
        } else {
            const big_int g = boost::multiprecision::gcd(rc, pivot.front().value);
            a = pivot.front().value / g;
            b = rc / g;
        }
        row out;
        out.reserve(r.size() + pivot.size());
        std::size_t i = 0, j = 0;
        while (i < r.size() || j < pivot.size()) {
            coeff v;
            std::uint64_t col;
            if (j == pivot.size() || (i < r.size() && r[i].col < pivot[j].col)) {
                col = r[i].col;
                v = arith_.mul(a, r[i].value);
                ++i;
            } else if (i == r.size() || pivot[j].col < r[i].col) {
                col = pivot[j].col;
                v = arith_.sub(coeff(0), arith_.mul(b, pivot[j].value));
                ++j;
            } else {
                col = r[i].col;
                v = arith_.sub(arith_.mul(a, r[i].value), arith_.mul(b, pivot[j].value));
                ++i;
                ++j;
            }
            if (!Arith::zero(v)) out.push_back({col, std::move(v)});
        }
        if constexpr (!std::is_same_v<Arith, mod_p_arith>) {
            if (!out.empty()) normalize(out);
        }
        return out;
    }

    Arith arith_;
    std::uint64_t columns_;
    std::vector<std::size_t> pivot_of_;
    std::vector<row> pivots_;
};

inline std::uint64_t checked_power(std::uint64_t n, std::size_t m, std::uint64_t cap) {
    std::uint64_t v = 1;
    for (std::size_t i = 0; i < m; ++i) {
        if (n != 0 && v > cap / n) return cap + 1;
        v *= n;
    }
    return v;
}

template <class Arith>
typename sparse_echelon<Arith>::row relation_row(const Arith& arith, const quadratic_relation& rel, std::uint64_t n,
                                                 std::uint64_t prefix, std::uint64_t suffix,
                                                 std::uint64_t suffix_len_pow) {
    typename sparse_echelon<Arith>::row r;
    // column of u x y v = ((u * n + x) * n + y) * n^{|v|} + v
    for (const auto& t : rel.terms) {
        auto v = arith.from(t.coeff);
        if (Arith::zero(v)) continue;
        r.push_back({((prefix * n + t.left) * n + t.right) * suffix_len_pow + suffix, std::move(v)});
    }
    std::sort(r.begin(), r.end(), [](const auto& a, const auto& b) { return a.col < b.col; });
    return r;
}

template <class Arith>
std::uint64_t direct_rank(const Arith& arith, const presentation& p, std::size_t m, std::uint64_t columns) {
    const std::uint64_t n = p.n();
    sparse_echelon<Arith> ech(arith, columns);
    for (const auto& rel : p.relations) {
        for (std::size_t left = 0; left + 2 <= m; ++left) {
            const std::size_t right = m - 2 - left;
            const std::uint64_t left_words = checked_power(n, left, columns);
            const std::uint64_t right_words = checked_power(n, right, columns);
            for (std::uint64_t u = 0; u < left_words; ++u)
                for (std::uint64_t v = 0; v < right_words; ++v) {
                    ech.insert(relation_row(arith, rel, n, u, v, right_words));
                    if (ech.full()) return ech.rank();
                }
        }
    }
    return ech.rank();
}

// I_m = X I_{m-1} + F X^{m-2}, carrying an echelon basis from degree to degree.
template <class Arith>
std::uint64_t incremental_rank(const Arith& arith, const presentation& p, std::size_t m, std::uint64_t cap) {
    using echelon = sparse_echelon<Arith>;
    const std::uint64_t n = p.n();
    std::vector<typename echelon::row> basis;  // spans I_{deg}
    std::uint64_t rank = 0;
    for (std::size_t deg = 2; deg <= m; ++deg) {
        const std::uint64_t columns = checked_power(n, deg, cap);
        const std::uint64_t shift = checked_power(n, deg - 1, cap);
        echelon ech(arith, columns);
        for (std::uint64_t x = 0; x < n && !ech.full(); ++x)
            for (const auto& b : basis) {
                auto r = b;
                for (auto& e : r) e.col += x * shift;
                ech.insert(std::move(r));
                if (ech.full()) break;
            }
        const std::uint64_t tail = checked_power(n, deg - 2, cap);
        for (const auto& rel : p.relations) {
            if (ech.full()) break;
            for (std::uint64_t v = 0; v < tail && !ech.full(); ++v) ech.insert(relation_row(arith, rel, n, 0, v, tail));
        }
        rank = ech.rank();
        basis = ech.rows();
    }
    return rank;
}

// n/d = x mod M with |n|, d <= bound = sqrt(M/2), if such a pair exists
inline bool rational_reconstruct(const big_int& x, const big_int& modulus, const big_int& bound, big_int& num,
                                 big_int& den) {
    big_int r0 = modulus, r1 = x, t0 = 0, t1 = 1;
    while (r1 > bound) {
        const big_int q = r0 / r1;
        big_int r2 = r0 - q * r1, t2 = t0 - q * t1;
        r0 = std::move(r1);
        r1 = std::move(r2);
        t0 = std::move(t1);
        t1 = std::move(t2);
    }
    if (t1 == 0 || boost::multiprecision::abs(t1) > bound || boost::multiprecision::gcd(r1, t1) != 1) return false;
    num = t1 < 0 ? big_int(-r1) : r1;
    den = boost::multiprecision::abs(t1);
    return true;
}

using integer_row = sparse_echelon<rational_arith>::row;

// i-th prime below 2^31, counting down
inline std::uint64_t modular_prime(std::size_t i) {
    static std::vector<std::uint64_t> primes;
    static std::mutex lock;
    std::lock_guard guard(lock);
    while (primes.size() <= i) {
        std::uint64_t p = primes.empty() ? std::uint64_t{1} << 31 : primes.back();
        do --p;
        while (!is_prime(p));
        primes.push_back(p);
    }
    return primes[i];
}

// Reduced echelon form of integer rows over the rationals, as primitive rows
// with positive leads. Residues modulo 31-bit primes are combined and lifted
// back to fractions; a candidate is accepted only when every input row is
// exactly its combination of the candidate rows. Since rank mod p never
// exceeds the rational rank, that pins the candidate down as the reduced
// echelon form. Returns nullopt when max_primes is not enough.
inline std::optional<std::vector<integer_row>> multimodular_rref(const std::vector<integer_row>& rows,
                                                                 std::uint64_t columns,
                                                                 std::size_t max_primes = 4096) {
    std::vector<std::uint64_t> pivots, free_cols;
    std::vector<std::size_t> free_index;
    std::vector<std::vector<big_int>> residues;  // [pivot row][free column]
    big_int modulus = 1;
    std::size_t used = 0, next_attempt = 4;
    bool have_profile = false;

    for (std::size_t tried = 0; tried < max_primes; ++tried) {
        const mod_p_arith arith{modular_prime(tried)};
        const std::uint64_t p = arith.p;
        sparse_echelon<mod_p_arith> ech(arith, columns);
        for (const auto& r : rows) {
            sparse_echelon<mod_p_arith>::row rp;
            for (const auto& e : r)
                if (auto v = arith.from(e.value); v != 0) rp.push_back({e.col, v});
            ech.insert(std::move(rp));
            if (ech.full()) break;
        }
        ech.reduce_fully();
        std::vector<std::uint64_t> piv;
        for (const auto& r : ech.rows()) piv.push_back(r.front().col);
        std::sort(piv.begin(), piv.end());

        if (!have_profile || piv.size() > pivots.size() || (piv.size() == pivots.size() && piv < pivots)) {
            have_profile = true;
            pivots = piv;
            free_cols.clear();
            free_index.assign(columns, 0);
            for (std::uint64_t c = 0, i = 0; c < columns; ++c)
                if (i < pivots.size() && pivots[i] == c)
                    ++i;
                else {
                    free_index[c] = free_cols.size();
                    free_cols.push_back(c);
                }
            residues.assign(pivots.size(), std::vector<big_int>(free_cols.size()));
            modulus = 1;
            used = 0;
            next_attempt = 4;
        } else if (piv != pivots) {
            continue;  // this prime divides a relevant minor
        }

        const std::uint64_t inv = modulus == 1 ? 1 : arith.inverse(arith.from(modulus));
        for (std::size_t i = 0; i < pivots.size(); ++i) {
            std::vector<std::uint64_t> dense(free_cols.size(), 0);
            for (const auto& e : ech.rows()[ech.pivot_row(pivots[i])])
                if (e.col != pivots[i]) dense[free_index[e.col]] = e.value;
            for (std::size_t j = 0; j < free_cols.size(); ++j) {
                big_int& x = residues[i][j];
                const std::uint64_t delta = arith.mul(arith.sub(dense[j], arith.from(x)), inv);
                if (delta) x += modulus * delta;
            }
        }
        modulus *= p;
        if (++used < next_attempt) continue;
        next_attempt *= 2;

        // lift, one row at a time over a running common denominator
        const big_int bound = isqrt(modulus / 2);
        std::vector<integer_row> candidate;
        bool lifted = true;
        for (std::size_t i = 0; i < pivots.size() && lifted; ++i) {
            big_int den = 1;
            integer_row r{{pivots[i], 0}};
            for (std::size_t j = 0; j < free_cols.size() && lifted; ++j) {
                if (residues[i][j] == 0) continue;
                big_int y = residues[i][j] * den % modulus;
                if (y > modulus / 2) y -= modulus;
                big_int num = y, extra = 1;
                if (boost::multiprecision::abs(y) > bound) {
                    if (y < 0) y += modulus;
                    lifted = rational_reconstruct(y, modulus, bound, num, extra);
                    if (!lifted) break;
                    for (auto& e : r) e.value *= extra;
                    den *= extra;
                }
                r.push_back({free_cols[j], num});
            }
            if (!lifted) break;
            r.front().value = den;
            big_int g = 0;
            for (const auto& e : r)
                if ((g = boost::multiprecision::gcd(g, e.value)) == 1) break;
            if (g > 1)
                for (auto& e : r) e.value /= g;
            candidate.push_back(std::move(r));
        }
        if (!lifted) continue;

        // every input row must equal sum_i a[pivot_i] * candidate_i / lead_i
        std::vector<std::size_t> row_of(columns, std::numeric_limits<std::size_t>::max());
        for (std::size_t i = 0; i < pivots.size(); ++i) row_of[pivots[i]] = i;
        bool verified = true;
        for (const auto& a : rows) {
            big_int lcm = 1;
            for (const auto& e : a)
                if (row_of[e.col] != std::numeric_limits<std::size_t>::max()) {
                    const big_int& lead = candidate[row_of[e.col]].front().value;
                    lcm = lcm / boost::multiprecision::gcd(lcm, lead) * lead;
                }
            std::vector<big_int> residual(free_cols.size());
            for (const auto& e : a) {
                const std::size_t i = row_of[e.col];
                if (i == std::numeric_limits<std::size_t>::max()) {
                    residual[free_index[e.col]] += lcm * e.value;
                    continue;
                }
                const auto& c = candidate[i];
                const big_int factor = e.value * (lcm / c.front().value);
                for (std::size_t t = 1; t < c.size(); ++t) residual[free_index[c[t].col]] -= factor * c[t].value;
            }
            for (const auto& v : residual)
                if (v != 0) {
                    verified = false;
                    break;
                }
            if (!verified) break;
        }
        if (verified) return candidate;
    }
    return std::nullopt;
}

// R_m = (R_{m-1} (x) X) / { sum c_xy [w x] (x) y : w a basis word of R_{m-2}, f a relation },
// since I_m = I_{m-1} X + X^{m-2} F. Each degree keeps the normal form of every
// column (u, x) of R_{m-1} (x) X over the surviving (non-pivot) columns.
template <class Arith>
class quotient_tower {
public:
    using coeff = typename Arith::coeff;
    using echelon = sparse_echelon<Arith>;
    using row = typename echelon::row;

    quotient_tower(Arith arith, const presentation& p) : arith_(std::move(arith)), p_(p), n_(p.n()) {
        dims_ = {1};
        if (n_ == 0) return;
        dims_.push_back(n_);
        nf_.resize(n_);
        for (std::uint64_t x = 0; x < n_; ++x) nf_[x] = {{{x, one()}}, one()};
    }

    const std::vector<std::uint64_t>& dims() const { return dims_; }

    // computes the next degree; returns its dimension
    std::uint64_t step() {
        const std::size_t m = dims_.size();
        if (dims_.back() == 0 || n_ == 0) {
            dims_.push_back(0);
            return 0;
        }
        const std::uint64_t columns = dims_.back() * n_;
        const std::vector<row> reduced = reduce(columns);
        std::vector<std::size_t> pivot_of(columns, echelon::none);
        for (std::size_t i = 0; i < reduced.size(); ++i) pivot_of[reduced[i].front().col] = i;

        std::vector<std::uint64_t> index(columns, echelon::none);
        std::uint64_t dim = 0;
        for (std::uint64_t c = 0; c < columns; ++c)
            if (pivot_of[c] == echelon::none) index[c] = dim++;
        std::vector<normal_form> nf(columns);
        for (std::uint64_t c = 0; c < columns; ++c) {
            const std::size_t piv = pivot_of[c];
            if (piv == echelon::none) {
                nf[c] = {{{index[c], one()}}, one()};
                continue;
            }
            const row& r = reduced[piv];
            normal_form& out = nf[c];
            out.den = r.front().value;
            for (std::size_t i = 1; i < r.size(); ++i) out.vec.push_back({index[r[i].col], arith_.sub(coeff(0), r[i].value)});
        }
        nf_ = std::move(nf);
        dims_.push_back(dim);
        return dim;
    }

private:
    // reduced echelon basis of the relation images in degree m
    std::vector<row> reduce(std::uint64_t columns) const {
        const std::size_t m = dims_.size();
        if constexpr (std::is_same_v<Arith, rational_arith>) {
            std::vector<row> rows;
            for (std::uint64_t w = 0; w < dims_[m - 2]; ++w)
                for (const auto& rel : p_.relations)
                    if (row r = relation_image(w, rel); !r.empty()) rows.push_back(std::move(r));
            if (auto rref = multimodular_rref(rows, columns)) return std::move(*rref);
            echelon ech(arith_, columns);
            for (auto& r : rows) ech.insert(std::move(r));
            ech.reduce_fully();
            return ech.rows();
        } else {
            echelon ech(arith_, columns);
            for (std::uint64_t w = 0; w < dims_[m - 2] && !ech.full(); ++w)
                for (const auto& rel : p_.relations) {
                    row r = relation_image(w, rel);
                    if (!r.empty()) ech.insert(std::move(r));
                    if (ech.full()) break;
                }
            ech.reduce_fully();
            return ech.rows();
        }
    }

    struct normal_form {
        row vec;  // over the basis of the current top degree
        coeff den;
    };

    static coeff one() { return coeff(1); }

    // sum c_xy NF([w x]) (x) y in coordinates of R_{m-1} (x) X
    row relation_image(std::uint64_t w, const quadratic_relation& rel) const {
        coeff scale = one();
        if constexpr (std::is_same_v<Arith, rational_arith>) {
            for (const auto& t : rel.terms) {
                const auto& den = nf_[w * n_ + t.left].den;
                scale = scale / boost::multiprecision::gcd(scale, den) * den;
            }
        }
        row r;
        for (const auto& t : rel.terms) {
            coeff c = arith_.from(t.coeff);
            if (Arith::zero(c)) continue;
            const auto& f = nf_[w * n_ + t.left];
            if constexpr (std::is_same_v<Arith, rational_arith>) c *= scale / f.den;
            for (const auto& e : f.vec) r.push_back({e.col * n_ + t.right, arith_.mul(c, e.value)});
        }
        std::sort(r.begin(), r.end(), [](const auto& a, const auto& b) { return a.col < b.col; });
        row merged;
        for (auto& e : r) {
            if (!merged.empty() && merged.back().col == e.col)
                merged.back().value = arith_.add(merged.back().value, e.value);
            else
                merged.push_back(std::move(e));
        }
        std::erase_if(merged, [](const auto& e) { return Arith::zero(e.value); });
        return merged;
    }

    Arith arith_;
    const presentation& p_;
    std::uint64_t n_;
    std::vector<std::uint64_t> dims_;
    std::vector<normal_form> nf_;  // columns of R_{m-2} (x) X for the latest degree m-1
};

inline void check_columns(const presentation& p, std::size_t m, std::uint64_t cap) {
    if (checked_power(p.n(), m, cap) > cap)
        throw cap_exceeded("graded_dimension: n^m = " + std::to_string(p.n()) + "^" + std::to_string(m) +
                           " exceeds the column cap of " + std::to_string(cap));
}

}  // namespace detail

enum class nilcheck_method {
    quotient,     // normal forms degree by degree, see quotient_tower
    direct,       // rank of all u f v in degree m
    incremental,  // I_m = X I_{m-1} + F X^{m-2} on full word columns
};

struct nilcheck_options {
    std::optional<field_spec> field;  // overrides the presentation's field
    std::uint64_t column_cap = default_column_cap;
    nilcheck_method method = nilcheck_method::quotient;
};

inline field_spec effective_field(const presentation& p, const nilcheck_options& opt) {
    return opt.field ? *opt.field : p.field;
}

namespace detail {

template <class Arith>
std::uint64_t full_word_rank(const Arith& arith, const presentation& p, std::size_t m, const nilcheck_options& opt) {
    if (opt.method == nilcheck_method::incremental) return incremental_rank(arith, p, m, opt.column_cap);
    return direct_rank(arith, p, m, checked_power(p.n(), m, opt.column_cap));
}

template <class Arith>
std::vector<std::uint64_t> dims_up_to(const Arith& arith, const presentation& p, std::size_t top,
                                      const nilcheck_options& opt) {
    std::vector<std::uint64_t> dims;
    if (opt.method == nilcheck_method::quotient) {
        quotient_tower<Arith> tower(arith, p);
        for (std::size_t m = 0; m <= top; ++m) {
            check_columns(p, m, opt.column_cap);
            while (tower.dims().size() <= m) tower.step();
            dims.push_back(tower.dims()[m]);
            if (dims.back() == 0) break;
        }
        return dims;
    }
    for (std::size_t m = 0; m <= top; ++m) {
        check_columns(p, m, opt.column_cap);
        const std::uint64_t columns = checked_power(p.n(), m, opt.column_cap);
        dims.push_back(m < 2 || p.relations.empty() ? columns : columns - full_word_rank(arith, p, m, opt));
        if (dims.back() == 0) break;
    }
    return dims;
}

}  // namespace detail

/// dim R_0, ..., dim R_top of K<X>/(relations), stopping after the first zero.
inline std::vector<std::uint64_t> graded_dimensions(const presentation& p, std::size_t top,
                                                    const nilcheck_options& opt = {}) {
    const field_spec field = effective_field(p, opt);
    if (field.modulus) {
        validate_modulus(*field.modulus);
        return detail::dims_up_to(detail::mod_p_arith{*field.modulus}, p, top, opt);
    }
    return detail::dims_up_to(detail::rational_arith{}, p, top, opt);
}

/// dim R_m of K<X>/(relations), exact over the rationals or GF(p).
inline std::uint64_t graded_dimension(const presentation& p, std::size_t m, const nilcheck_options& opt = {}) {
    detail::check_columns(p, m, opt.column_cap);
    const field_spec field = effective_field(p, opt);
    if (opt.method != nilcheck_method::quotient) {
        const std::uint64_t columns = detail::checked_power(p.n(), m, opt.column_cap);
        if (m < 2 || p.relations.empty()) return columns;
        if (field.modulus) {
            validate_modulus(*field.modulus);
            return columns - detail::full_word_rank(detail::mod_p_arith{*field.modulus}, p, m, opt);
        }
        return columns - detail::full_word_rank(detail::rational_arith{}, p, m, opt);
    }
    const auto dims = graded_dimensions(p, m, opt);
    return m < dims.size() ? dims[m] : 0;
}

struct hilbert_report {
    std::size_t n = 0, d = 0;
    std::vector<std::uint64_t> dims;
    std::optional<truncated_series> gs_bound;  // absent when d > n^2
    bool gs_ok = true;
    std::optional<unsigned> k;
    bool nilpotent = false;  // R_k = 0, meaningful when k is set
    field_spec field;

    std::uint64_t dim(std::size_t m) const { return m < dims.size() ? dims[m] : 0; }

    std::string text() const {
        std::ostringstream os;
        os << "field: " << field.str() << "\n";
        os << "generators: " << n << "\n";
        os << "relations: " << d << "\n";
        for (std::size_t m = 0; m < dims.size(); ++m) os << "dim R_" << m << " = " << dims[m] << "\n";
        if (gs_bound) {
            os << "gs bound: " << gs_bound->str() << "\n";
            os << "gs check: " << (gs_ok ? "OK" : "VIOLATED") << "\n";
        } else {
            os << "gs bound: not applicable (d > n^2)\n";
        }
        if (k) {
            if (nilpotent && field.modulus)
                os << "note: full rank over GF(" << *field.modulus
                   << ") implies R_" << *k << " = 0 over the rationals for the integer lift\n";
            if (nilpotent)
                os << "R_" << *k << " = 0: NILPOTENT\n";
            else
                os << "R_" << *k << " != 0: NOT NILPOTENT (dim R_" << *k << " = " << dim(*k) << ")\n";
        }
        return os.str();
    }

    ordered_json json() const {
        ordered_json j;
        j["field"] = field.modulus ? ordered_json{{"mod", *field.modulus}} : ordered_json("rational");
        j["n"] = n;
        j["d"] = d;
        j["dims"] = dims;
        if (gs_bound) {
            std::vector<std::string> coeffs;
            for (const auto& c : gs_bound->coeffs) coeffs.push_back(c.str());
            j["gs_bound"] = {{"coeffs", coeffs}, {"complete", gs_bound->complete}};
        } else {
            j["gs_bound"] = nullptr;
        }
        j["gs_ok"] = gs_ok;
        if (k) {
            j["k"] = *k;
            j["nilpotent"] = nilpotent;
        }
        return j;
    }
};

/**
 * dims[0..max_degree] (extended to k when k is larger), stopping at the first
 * zero dimension since all later ones vanish too.
 */
inline hilbert_report make_hilbert_report(const presentation& p, std::size_t max_degree,
                                          std::optional<unsigned> k = std::nullopt, const nilcheck_options& opt = {}) {
    hilbert_report rep;
    rep.n = p.n();
    rep.d = p.d();
    rep.k = k;
    rep.field = effective_field(p, opt);
    const std::size_t top = k ? std::max<std::size_t>(max_degree, *k) : max_degree;
    rep.dims = graded_dimensions(p, top, opt);
    if (rep.d <= rep.n * rep.n) {
        rep.gs_bound = gs_truncated_series(rep.n, rep.d, rep.dims.size() - 1);
        for (std::size_t m = 0; m < rep.dims.size(); ++m)
            if (big_int(rep.dims[m]) < (*rep.gs_bound)[m]) rep.gs_ok = false;
    }
    if (k) rep.nilpotent = rep.dim(*k) == 0;
    return rep;
}

inline bool is_k_step_nilpotent(const presentation& p, unsigned k, const nilcheck_options& opt = {}) {
    return graded_dimension(p, k, opt) == 0;
}

}  // namespace qnil
