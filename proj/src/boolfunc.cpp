#include "bfa/boolfunc.hpp"

#include <algorithm>
#include <bit>
#include <cctype>
#include <set>

namespace bfa {

namespace {

constexpr int kMaxVars = 16;

}  // namespace

// --- BoolFunc -------------------------------------------------------------

BoolFunc::BoolFunc(int n, std::vector<uint8_t> table) : n_(n), table_(std::move(table)) {
    if (n < 0 || n > kMaxVars)
        throw std::invalid_argument("BoolFunc: variable count must be in [0, 16]");
    if (table_.size() != (size_t(1) << n))
        throw std::invalid_argument("BoolFunc: truth table must have exactly 2^n entries");
    for (auto& v : table_) v &= 1;
}

BoolFunc BoolFunc::constant(int n, int value) {
    return BoolFunc(n, std::vector<uint8_t>(size_t(1) << n, uint8_t(value & 1)));
}

BoolFunc BoolFunc::operator+(const BoolFunc& g) const {
    if (g.n_ != n_)
        throw std::domain_error("BoolFunc: operands live on different variable counts");
    std::vector<uint8_t> t(table_);
    for (uint32_t x = 0; x < size(); ++x) t[x] ^= g.table_[x];
    return BoolFunc(n_, std::move(t));
}

BoolFunc BoolFunc::operator+(int c) const {
    if ((c & 1) == 0) return *this;
    std::vector<uint8_t> t(table_);
    for (auto& v : t) v ^= 1;
    return BoolFunc(n_, std::move(t));
}

BoolFunc from_truth_table(int n, const std::vector<uint8_t>& bits) {
    if (n < 0 || n > kMaxVars)
        throw std::invalid_argument("from_truth_table: variable count must be in [0, 16]");
    if (bits.size() != (size_t(1) << n))
        throw std::invalid_argument("from_truth_table: expected exactly 2^n bits");
    return BoolFunc(n, bits);
}

uint32_t weight(const BoolFunc& f) {
    uint32_t w = 0;
    for (uint32_t x = 0; x < f.size(); ++x) w += f(x);
    return w;
}

bool is_balanced(const BoolFunc& f) {
    return f.n() >= 1 && weight(f) == (f.size() >> 1);
}

// --- ANF / Moebius transform ----------------------------------------------

namespace {

// in-place binary Moebius transform; an involution
void moebius(std::vector<uint8_t>& t) {
    const uint32_t size = uint32_t(t.size());
    for (uint32_t step = 1; step < size; step <<= 1)
        for (uint32_t j = 0; j < size; ++j)
            if (j & step) t[j] ^= t[j ^ step];
}

}  // namespace

Anf anf(const BoolFunc& f) {
    std::vector<uint8_t> c = f.table();
    moebius(c);
    Anf a;
    a.n = f.n();
    for (uint32_t m = 0; m < c.size(); ++m)
        if (c[m]) a.monomials.push_back(m);
    return a;
}

BoolFunc truth_table(const Anf& a) {
    std::vector<uint8_t> t(size_t(1) << a.n, 0);
    for (uint32_t m : a.monomials) {
        if (m >= t.size())
            throw std::invalid_argument("truth_table: monomial mask out of range");
        t[m] ^= 1;
    }
    moebius(t);
    return BoolFunc(a.n, std::move(t));
}

int degree(const Anf& a) {
    int d = 0;
    for (uint32_t m : a.monomials) d = std::max(d, std::popcount(m));
    return d;
}

int degree(const BoolFunc& f) { return degree(anf(f)); }

// --- Walsh transform --------------------------------------------------------

int64_t WalshSpectrum::max_abs() const {
    int64_t m = 0;
    for (int64_t v : values) m = std::max(m, v < 0 ? -v : v);
    return m;
}

std::vector<int64_t> WalshSpectrum::distinct() const {
    std::set<int64_t> s(values.begin(), values.end());
    return {s.begin(), s.end()};
}

WalshSpectrum walsh(const BoolFunc& f) {
    const uint32_t size = f.size();
    std::vector<int64_t> w(size);
    for (uint32_t x = 0; x < size; ++x) w[x] = f(x) ? -1 : 1;
    for (uint32_t h = 1; h < size; h <<= 1) {
        for (uint32_t i = 0; i < size; i += h << 1) {
            for (uint32_t j = i; j < i + h; ++j) {
                const int64_t a = w[j];
                const int64_t b = w[j + h];
                w[j] = a + b;
                w[j + h] = a - b;
            }
        }
    }
    return WalshSpectrum{f.n(), std::move(w)};
}

int64_t nonlinearity(const WalshSpectrum& w) {
    return (int64_t(1) << (w.n - 1)) - w.max_abs() / 2;
}

int64_t nonlinearity(const BoolFunc& f) { return nonlinearity(walsh(f)); }

// --- derivatives and linear structures --------------------------------------

BoolFunc derivative(const BoolFunc& f, uint32_t a) {
    if (a >= f.size())
        throw std::invalid_argument("derivative: shift must have n bits");
    std::vector<uint8_t> t(f.size());
    for (uint32_t x = 0; x < f.size(); ++x) t[x] = f(x ^ a) ^ f(x);
    return BoolFunc(f.n(), std::move(t));
}

namespace {

// D_a f constant? Early exit on the first disagreement.
bool derivative_constant(const BoolFunc& f, uint32_t a, uint8_t* value) {
    const uint8_t c = f(a) ^ f(0);
    for (uint32_t x = 0; x < f.size(); ++x)
        if ((f(x ^ a) ^ f(x)) != c) return false;
    if (value) *value = c;
    return true;
}

// reduce a set of vectors to a row-reduced echelon basis over F_2
std::vector<uint32_t> rref_basis(const std::vector<uint32_t>& vecs) {
    // rows stay sorted descending with pairwise-distinct leading bits, so a
    // single forward pass fully reduces each incoming vector
    std::vector<uint32_t> rows;
    for (uint32_t v : vecs) {
        for (uint32_t r : rows)
            if (std::bit_width(v) == std::bit_width(r)) v ^= r;
        if (v == 0) continue;
        rows.push_back(v);
        std::sort(rows.begin(), rows.end(), std::greater<>());
    }
    // clear pivot bits from the other rows
    for (size_t i = 0; i < rows.size(); ++i) {
        const uint32_t pivot = uint32_t(1) << (std::bit_width(rows[i]) - 1);
        for (size_t j = 0; j < rows.size(); ++j)
            if (j != i && (rows[j] & pivot)) rows[j] ^= rows[i];
    }
    return rows;
}

}  // namespace

LinearSpace linear_space(const BoolFunc& f) {
    LinearSpace v;
    v.n = f.n();
    std::vector<uint32_t> elements;
    for (uint32_t a = 0; a < f.size(); ++a) {
        uint8_t c = 0;
        if (derivative_constant(f, a, &c)) {
            elements.push_back(a);
            v.constants.emplace_back(a, c);
        }
    }
    v.basis = rref_basis(elements);
    v.dim = int(v.basis.size());
    return v;
}

int linear_space_dim(const BoolFunc& f) {
    uint32_t count = 0;
    for (uint32_t a = 0; a < f.size(); ++a)
        if (derivative_constant(f, a, nullptr)) ++count;
    // V(f) is a subspace, so the count is a power of two
    return std::bit_width(count) - 1;
}

bool LinearSpace::contains(uint32_t a) const {
    return std::binary_search(
        constants.begin(), constants.end(), std::make_pair(a, uint8_t(0)),
        [](const auto& x, const auto& y) { return x.first < y.first; });
}

bool sigma_one(const BoolFunc& f) {
    for (uint32_t a = 1; a < f.size(); ++a)
        if (derivative_constant(f, a, nullptr)) return true;
    return false;
}

std::vector<uint32_t> gamma_set(const BoolFunc& f) {
    std::vector<uint32_t> out;
    if (f.n() == 0) return out;  // constants on 0 variables have no balanced derivative
    const uint32_t half = f.size() >> 1;
    for (uint32_t a = 0; a < f.size(); ++a) {
        uint32_t w = 0;
        for (uint32_t x = 0; x < f.size(); ++x) w += f(x ^ a) ^ f(x);
        if (w == half) out.push_back(a);
    }
    return out;
}

// --- classification ----------------------------------------------------------

Classification classify(const WalshSpectrum& w) {
    std::set<int64_t> abs_vals;
    for (int64_t v : w.values) abs_vals.insert(v < 0 ? -v : v);
    const bool has_zero = abs_vals.count(0) > 0;
    const size_t nonzero = abs_vals.size() - (has_zero ? 1 : 0);

    if (w.n % 2 == 0 && !has_zero && nonzero == 1 &&
        *abs_vals.rbegin() == int64_t(1) << (w.n / 2))
        return {SpectrumClass::Bent, int64_t(1) << (w.n / 2)};

    const int64_t semi_amp = int64_t(1) << ((w.n % 2) ? (w.n + 1) / 2 : (w.n + 2) / 2);
    if (nonzero <= 1 && (nonzero == 0 || *abs_vals.rbegin() == semi_amp))
        return {SpectrumClass::SemiBent, semi_amp};

    if (nonzero == 1) return {SpectrumClass::Plateaued, *abs_vals.rbegin()};
    return {SpectrumClass::Other, 0};
}

Classification classify(const BoolFunc& f) { return classify(walsh(f)); }

const char* to_string(SpectrumClass cls) {
    switch (cls) {
        case SpectrumClass::Bent: return "bent";
        case SpectrumClass::SemiBent: return "semi-bent";
        case SpectrumClass::Plateaued: return "plateaued";
        case SpectrumClass::Other: return "other";
    }
    return "?";
}

bool quad_equiv(const BoolFunc& g, const BoolFunc& h) {
    if (g.n() != h.n())
        throw std::domain_error("quad_equiv: functions live on different variable counts");
    if (is_balanced(g) || is_balanced(h))
        throw std::domain_error("quad_equiv: defined for unbalanced functions only");
    if (degree(g) != 2 || degree(h) != 2)
        throw std::domain_error("quad_equiv: defined for quadratic functions only");
    return weight(g) == weight(h) && nonlinearity(g) == nonlinearity(h);
}

// --- hex truth tables ---------------------------------------------------------

std::string to_hex(const BoolFunc& f) {
    if (f.n() < 2) throw std::domain_error("to_hex: requires n >= 2");
    const uint32_t digits = f.size() / 4;
    std::string out(digits, '0');
    for (uint32_t d = 0; d < digits; ++d) {
        // leftmost digit carries the highest indices
        const uint32_t base = (digits - 1 - d) * 4;
        int v = 0;
        for (int b = 3; b >= 0; --b) v = (v << 1) | f(base + b);
        out[d] = "0123456789abcdef"[v];
    }
    return out;
}

BoolFunc from_hex(std::string_view hex, std::optional<int> n) {
    size_t pos = 0;
    if (hex.size() >= 2 && hex[0] == '0' && (hex[1] == 'x' || hex[1] == 'X')) pos = 2;
    const std::string_view digits = hex.substr(pos);
    if (digits.empty()) throw ParseError("empty truth table", pos);

    int inferred = -1;
    for (int cand = 2; cand <= kMaxVars; ++cand)
        if ((size_t(1) << cand) == digits.size() * 4) inferred = cand;
    if (n) {
        if (*n < 2 || *n > kMaxVars)
            throw ParseError("variable count must be in [2, 16]", 0);
        if ((size_t(1) << *n) != digits.size() * 4)
            throw ParseError("expected exactly 2^n/4 hex digits", pos);
    } else if (inferred < 0) {
        throw ParseError("digit count is not 2^n/4 for any n in [2, 16]", pos);
    }
    const int vars = n ? *n : inferred;

    std::vector<uint8_t> bits(size_t(1) << vars, 0);
    for (size_t d = 0; d < digits.size(); ++d) {
        const char c = digits[d];
        int v;
        if (c >= '0' && c <= '9') v = c - '0';
        else if (c >= 'a' && c <= 'f') v = c - 'a' + 10;
        else if (c >= 'A' && c <= 'F') v = c - 'A' + 10;
        else throw ParseError("invalid hex digit", pos + d);
        const uint32_t base = uint32_t(digits.size() - 1 - d) * 4;
        for (int b = 0; b < 4; ++b) bits[base + b] = (v >> b) & 1;
    }
    return BoolFunc(vars, std::move(bits));
}

// --- ANF strings ----------------------------------------------------------------

std::string to_anf_string(const Anf& a) {
    if (a.monomials.empty()) return "0";
    std::vector<uint32_t> sorted = a.monomials;
    std::sort(sorted.begin(), sorted.end(), [](uint32_t x, uint32_t y) {
        const int px = std::popcount(x), py = std::popcount(y);
        return px != py ? px > py : x < y;
    });
    std::string out;
    for (uint32_t m : sorted) {
        if (!out.empty()) out += " + ";
        if (m == 0) {
            out += "1";
            continue;
        }
        bool first = true;
        for (int i = 0; i < a.n; ++i)
            if (m >> i & 1) {
                if (!first) out += "*";
                out += "x" + std::to_string(i + 1);
                first = false;
            }
    }
    return out;
}

Anf parse_anf(std::string_view text, std::optional<int> n) {
    std::set<uint32_t> monomials;  // XOR semantics: toggled per occurrence
    int max_var = 0;
    size_t i = 0;
    const auto skip_ws = [&] { while (i < text.size() && std::isspace(uint8_t(text[i]))) ++i; };

    const auto parse_term = [&]() -> uint32_t {
        uint32_t mask = 0;
        bool expect_factor = true;
        while (true) {
            skip_ws();
            if (expect_factor) {
                if (i >= text.size()) throw ParseError("expected a term", i);
                if (text[i] == '0') {
                    if (mask != 0)
                        throw ParseError("'0' is only valid as a standalone term", i);
                    ++i;
                    return uint32_t(-1);  // sentinel: contributes nothing
                }
                if (text[i] == '1') {
                    ++i;  // multiplicative identity
                } else if (text[i] == 'x' || text[i] == 'X') {
                    const size_t var_pos = i++;
                    size_t start = i;
                    while (i < text.size() && std::isdigit(uint8_t(text[i]))) ++i;
                    if (start == i) throw ParseError("expected a variable index after 'x'", var_pos + 1);
                    const int idx = std::stoi(std::string(text.substr(start, i - start)));
                    if (idx < 1 || idx > kMaxVars)
                        throw ParseError("variable index out of range [1, 16]", start);
                    mask |= uint32_t(1) << (idx - 1);
                    max_var = std::max(max_var, idx);
                } else {
                    throw ParseError("expected 'x<i>' or '1'", i);
                }
                expect_factor = false;
            } else {
                if (i < text.size() && text[i] == '*') {
                    ++i;
                    expect_factor = true;
                } else {
                    return mask;
                }
            }
        }
    };

    skip_ws();
    if (i >= text.size()) throw ParseError("empty expression", 0);
    while (true) {
        const uint32_t mask = parse_term();
        if (mask != uint32_t(-1)) {
            if (monomials.count(mask)) monomials.erase(mask);
            else monomials.insert(mask);
        }
        skip_ws();
        if (i >= text.size()) break;
        if (text[i] != '+') throw ParseError("expected '+' between terms", i);
        ++i;
    }

    int vars = n.value_or(std::max(max_var, 1));
    if (n && *n < max_var)
        throw ParseError("expression uses x" + std::to_string(max_var) +
                             " but only " + std::to_string(*n) + " variables were declared",
                         0);
    Anf a;
    a.n = vars;
    a.monomials.assign(monomials.begin(), monomials.end());
    return a;
}

}  // namespace bfa
