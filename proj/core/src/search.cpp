#include "frey/search.hpp"

#include "frey/criteria.hpp"
#include "frey/errors.hpp"
#include "frey/primes.hpp"

#include <algorithm>
#include <cassert>
#include <future>
#include <thread>

namespace frey {

std::vector<FieldElement> enumerate_bounded(const FieldPtr& field, long height)
{
    if (height < 0) throw std::invalid_argument("height must be >= 0");
    int n = field->degree();
    std::vector<FieldElement> out;
    std::vector<long> idx(static_cast<size_t>(n), 0);
    const long width = 2 * height + 1;
    while (true) {
        std::vector<Rat> coords(static_cast<size_t>(n));
        for (int i = 0; i < n; ++i) coords[static_cast<size_t>(i)] = Rat(idx[static_cast<size_t>(i)] - height);
        out.emplace_back(field, std::move(coords));
        int i = n - 1;
        for (; i >= 0; --i) {
            if (++idx[static_cast<size_t>(i)] < width) break;
            idx[static_cast<size_t>(i)] = 0;
        }
        if (i < 0) break;
    }
    return out;
}

namespace {

// |det| of the Z-span of the rows (each row = coordinates of a generator of
// the ideal lattice); 1 means the pair generates the unit ideal.
Int lattice_index(std::vector<std::vector<Int>> rows, int n)
{
    // integer row HNF, fraction-free
    int rank = 0;
    Int det = 1;
    for (int col = 0; col < n; ++col) {
        int piv = -1;
        for (int r = rank; r < static_cast<int>(rows.size()); ++r)
            if (rows[static_cast<size_t>(r)][static_cast<size_t>(col)] != 0) {
                piv = r;
                break;
            }
        if (piv < 0) return 0; // rank-deficient: not full (cannot happen for nonzero ideals)
        std::swap(rows[static_cast<size_t>(piv)], rows[static_cast<size_t>(rank)]);
        for (int r = rank + 1; r < static_cast<int>(rows.size()); ++r) {
            auto& top = rows[static_cast<size_t>(rank)];
            auto& cur = rows[static_cast<size_t>(r)];
            while (cur[static_cast<size_t>(col)] != 0) {
                Int q = top[static_cast<size_t>(col)] / cur[static_cast<size_t>(col)];
                for (int j = col; j < n; ++j)
                    top[static_cast<size_t>(j)] -= q * cur[static_cast<size_t>(j)];
                std::swap(top, cur);
            }
        }
        det *= rows[static_cast<size_t>(rank)][static_cast<size_t>(col)];
        ++rank;
    }
    return abs(det);
}

// rows of the multiplication-by-x matrix over the integral basis
std::vector<std::vector<Int>> mult_matrix_rows(const FieldPtr& K, const FieldElement& x)
{
    int n = K->degree();
    std::vector<std::vector<Int>> rows;
    FieldElement basis_power = FieldElement::one(K);
    // basis vectors: 1, w, w^2, ... (w = theta for monogenic, the quadratic
    // generator otherwise)
    std::vector<Rat> gen_coords(static_cast<size_t>(n), Rat(0));
    if (n > 1) gen_coords[1] = Rat(1);
    FieldElement gen = n > 1 ? FieldElement(K, gen_coords) : FieldElement::one(K);
    for (int i = 0; i < n; ++i) {
        FieldElement prod = x * basis_power;
        std::vector<Int> row(static_cast<size_t>(n));
        for (int j = 0; j < n; ++j) {
            assert(is_integer(prod.coords()[static_cast<size_t>(j)]));
            row[static_cast<size_t>(j)] = Int(prod.coords()[static_cast<size_t>(j)].get_num());
        }
        rows.push_back(std::move(row));
        basis_power = basis_power * gen;
    }
    return rows;
}

bool pair_coprime(const FieldPtr& K, const FieldElement& x, const FieldElement& y)
{
    if (K->kind() == Field::Kind::Rational) {
        Int a(x.coords()[0].get_num()), b(y.coords()[0].get_num());
        return gcd(a, b) == 1;
    }
    auto rows = mult_matrix_rows(K, x);
    auto rows2 = mult_matrix_rows(K, y);
    for (auto& r : rows2) rows.push_back(std::move(r));
    return lattice_index(std::move(rows), K->degree()) == 1;
}

} // namespace

bool is_primitive(const FieldPtr& field, const FieldElement& a, const FieldElement& b,
                  const FieldElement& c)
{
    if (a.is_zero() || b.is_zero() || c.is_zero()) throw Error(Errc::TrivialTriple, "abc = 0");
    if (!a.is_integral() || !b.is_integral() || !c.is_integral())
        throw Error(Errc::TrivialTriple, "triples must be integral");
    return pair_coprime(field, a, b) && pair_coprime(field, a, c) && pair_coprime(field, b, c);
}

namespace {

long next_prime_coprime(long start, const Int& avoid)
{
    Int p = start;
    while (true) {
        mpz_nextprime(p.get_mpz_t(), p.get_mpz_t());
        if (gcd(avoid, p) == 1) return p.get_si();
    }
}

struct RationalPruner {
    bool active = false;
    long ell = 97;
    std::vector<long> pow_mod;   // value^p mod ell per box element
    std::vector<char> is_target; // residues r with r = a^2 (or 2a^2) mod ell

    void init(const SearchTask& task, const std::vector<FieldElement>& box)
    {
        if (task.field->kind() != Field::Kind::Rational) return;
        Int avoid = 2 * task.B * task.C.value();
        ell = task.prune_modulus;
        if (gcd(Int(ell), avoid) != 1) ell = next_prime_coprime(ell, avoid);
        active = true;
        pow_mod.resize(box.size());
        for (size_t i = 0; i < box.size(); ++i) {
            Int v = Int(box[i].coords()[0].get_num()) % ell;
            if (v < 0) v += ell;
            Int pm = 1;
            for (int k = 0; k < task.p; ++k) pm = (pm * v) % ell;
            pow_mod[i] = pm.get_si();
        }
        is_target.assign(static_cast<size_t>(ell), 0);
        for (long a = 0; a < ell; ++a) {
            long sq = static_cast<long>((static_cast<__int128>(a) * a) % ell);
            if (task.family == Family::TwistedEq) sq = (2 * sq) % ell;
            is_target[static_cast<size_t>(sq)] = 1;
        }
    }

    bool admissible(const SearchTask& task, size_t bi, size_t ci) const
    {
        if (!active) return true;
        Int rhs = (task.B * pow_mod[bi] + task.C.value() * pow_mod[ci]) % ell;
        if (rhs < 0) rhs += ell;
        return is_target[rhs.get_ui()] != 0;
    }
};

} // namespace

std::vector<SolutionRecord> run_search(const SearchTask& task)
{
    if (task.height < 1) throw std::invalid_argument("height must be >= 1");
    if (task.B == 0 || task.B % 2 == 0) throw Error(Errc::EvenB, "B must be odd");
    const FieldPtr& K = task.field;
    auto box = enumerate_bounded(K, task.height);
    const Int Cv = task.C.value();
    const Rat Bq = Rat(task.B);
    const Rat Cq = Rat(Cv);

    // p-th powers, computed once per box element
    std::vector<FieldElement> pow_p(box.size(), FieldElement::zero(K));
    for (size_t i = 0; i < box.size(); ++i) pow_p[i] = box[i].pow(task.p);

    RationalPruner pruner;
    pruner.init(task, box);

    // classification context
    auto sk = s_set(K, 1);
    std::vector<std::array<FieldElement, 3>> sr_members;
    if (task.family == Family::SquareEq && task.C.power_of_two)
        sr_members = exceptional_set(K, task.B, task.C.r).members;

    auto classify = [&](const FieldElement& a, const FieldElement& b, const FieldElement& c) {
        for (const auto& m : sr_members) {
            if (m[0] == a && m[1] == b && m[2] == c) return SolutionClass::ExceptionalSr;
        }
        bool wk = true;
        for (const auto& P : sk) {
            if (!prime_divides(P, b) && !prime_divides(P, c)) {
                wk = false;
                break;
            }
        }
        return wk ? SolutionClass::WKMember : SolutionClass::OtherNontrivialPrimitive;
    };

    const long H = task.height;
    auto within_box = [&](const FieldElement& x) {
        for (const Rat& coord : x.coords()) {
            if (!is_integer(coord)) return false;
            if (abs(Int(coord.get_num())) > H) return false;
        }
        return true;
    };

    auto scan_chunk = [&](size_t b_lo, size_t b_hi) {
        std::vector<SolutionRecord> local;
        for (size_t bi = b_lo; bi < b_hi; ++bi) {
            if (box[bi].is_zero()) continue;
            for (size_t ci = 0; ci < box.size(); ++ci) {
                if (box[ci].is_zero()) continue;
                if (!pruner.admissible(task, bi, ci)) continue;
                FieldElement rhs = pow_p[bi] * Bq + pow_p[ci] * Cq;
                FieldElement target = task.family == Family::TwistedEq ? rhs * make_rat(1, 2) : rhs;
                if (task.family == Family::TwistedEq && !target.is_integral()) continue;
                auto a = sqrt_in_field(target);
                if (!a || a->is_zero()) continue;
                if (!within_box(*a)) continue;
                if (!is_primitive(K, *a, box[bi], box[ci])) continue;
                for (const FieldElement& root : {*a, -*a}) {
                    SolutionRecord rec;
                    rec.a = root;
                    rec.b = box[bi];
                    rec.c = box[ci];
                    rec.cls = classify(root, box[bi], box[ci]);
                    FieldElement lhs = root * root;
                    if (task.family == Family::TwistedEq) lhs = lhs * Rat(2);
                    FieldElement resid = lhs - rhs;
                    if (!resid.is_zero()) throw std::logic_error("solution failed re-validation");
                    rec.residual = 0;
                    local.push_back(std::move(rec));
                }
            }
        }
        return local;
    };

    int chunks = std::max(1, task.parallel_chunks);
    std::vector<SolutionRecord> all;
    if (chunks == 1) {
        all = scan_chunk(0, box.size());
    } else {
        std::vector<std::future<std::vector<SolutionRecord>>> futures;
        size_t per = (box.size() + static_cast<size_t>(chunks) - 1) / static_cast<size_t>(chunks);
        for (int t = 0; t < chunks; ++t) {
            size_t lo = static_cast<size_t>(t) * per;
            size_t hi = std::min(box.size(), lo + per);
            if (lo >= hi) break;
            futures.push_back(std::async(std::launch::async, scan_chunk, lo, hi));
        }
        for (auto& f : futures) {
            auto part = f.get();
            all.insert(all.end(), std::make_move_iterator(part.begin()), std::make_move_iterator(part.end()));
        }
    }
    std::sort(all.begin(), all.end(), [](const SolutionRecord& x, const SolutionRecord& y) {
        int c = x.a.compare(y.a);
        if (c != 0) return c < 0;
        c = x.b.compare(y.b);
        if (c != 0) return c < 0;
        return x.c.compare(y.c) < 0;
    });
    all.erase(std::unique(all.begin(), all.end(),
                          [](const SolutionRecord& x, const SolutionRecord& y) {
                              return x.a == y.a && x.b == y.b && x.c == y.c;
                          }),
              all.end());
    return all;
}

} // namespace frey
