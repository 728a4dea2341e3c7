#include "coinv/fp_group.hpp"

#include <algorithm>
#include <deque>
#include <stdexcept>

#include "coinv/int_matrix.hpp"
#include "coinv/snf.hpp"

namespace coinv::fp {

namespace {

// column index for a signed letter: generator g forward at 2g, inverse at 2g+1
std::size_t column(int letter) {
    if (letter > 0) return 2 * static_cast<std::size_t>(letter - 1);
    if (letter < 0) return 2 * static_cast<std::size_t>(-letter - 1) + 1;
    throw std::invalid_argument("zero letter in word");
}

std::size_t inverse_column(std::size_t col) { return col ^ 1u; }

std::vector<std::size_t> to_columns(const Word& w) {
    std::vector<std::size_t> cols;
    cols.reserve(w.size());
    for (int letter : w) cols.push_back(column(letter));
    return cols;
}

class Enumerator {
public:
    Enumerator(const FpGroup& g, const std::vector<Word>& subgroup_gens,
               long coset_limit)
        : ngens_(g.ngens), ncols_(2 * static_cast<std::size_t>(g.ngens)),
          limit_(coset_limit) {
        for (const auto& r : g.relators) relators_.push_back(to_columns(r));
        for (const auto& w : subgroup_gens) subgens_.push_back(to_columns(w));
        new_coset();
    }

    CosetTable run() {
        for (const auto& w : subgens_) scan_and_fill(0, w);
        for (long alpha = 0; alpha < static_cast<long>(table_.size()); ++alpha) {
            if (!alive(alpha)) continue;
            for (const auto& r : relators_) {
                scan_and_fill(alpha, r);
                if (!alive(alpha)) break;
            }
            if (!alive(alpha)) continue;
            for (std::size_t x = 0; x < ncols_; ++x)
                if (table_[alpha][x] == -1) define(alpha, x);
        }
        return compact();
    }

private:
    bool alive(long c) const { return p_[c] == c; }

    long rep(long c) {
        long r = c;
        while (p_[r] != r) r = p_[r];
        while (p_[c] != r) {
            long next = p_[c];
            p_[c] = r;
            c = next;
        }
        return r;
    }

    long new_coset() {
        if (static_cast<long>(table_.size()) >= limit_)
            throw std::runtime_error("coset enumeration exceeded coset limit");
        table_.emplace_back(ncols_, -1);
        p_.push_back(static_cast<long>(p_.size()));
        return static_cast<long>(table_.size()) - 1;
    }

    long define(long c, std::size_t x) {
        long d = new_coset();
        table_[c][x] = d;
        table_[d][inverse_column(x)] = c;
        return d;
    }

    void merge(long a, long b) {
        a = rep(a);
        b = rep(b);
        if (a == b) return;
        if (a > b) std::swap(a, b);
        p_[b] = a;
        dead_.push_back(b);
    }

    void coincidence(long a, long b) {
        merge(a, b);
        while (!dead_.empty()) {
            long gamma = dead_.front();
            dead_.pop_front();
            for (std::size_t x = 0; x < ncols_; ++x) {
                long delta = table_[gamma][x];
                if (delta == -1) continue;
                table_[delta][inverse_column(x)] = -1;
                long mu = rep(gamma);
                long nu = rep(delta);
                if (table_[mu][x] != -1)
                    merge(nu, table_[mu][x]);
                else if (table_[nu][inverse_column(x)] != -1)
                    merge(mu, table_[nu][inverse_column(x)]);
                else {
                    table_[mu][x] = nu;
                    table_[nu][inverse_column(x)] = mu;
                }
            }
        }
    }

    void scan_and_fill(long alpha, const std::vector<std::size_t>& w) {
        if (w.empty()) return;
        long f = alpha;
        std::size_t i = 0;
        long b = alpha;
        std::size_t j = w.size(); // scan backward over w[i..j-1]
        for (;;) {
            while (i < j && table_[f][w[i]] != -1) f = table_[f][w[i++]];
            if (i == j) {
                if (f != b) coincidence(f, b);
                return;
            }
            while (j > i && table_[b][inverse_column(w[j - 1])] != -1)
                b = table_[b][inverse_column(w[--j])];
            if (j == i) {
                coincidence(f, b);
                return;
            }
            if (j == i + 1) {
                // deduction closing the scan
                table_[f][w[i]] = b;
                table_[b][inverse_column(w[i])] = f;
                return;
            }
            f = define(f, w[i++]);
        }
    }

    CosetTable compact() {
        std::vector<long> remap(table_.size(), -1);
        long live = 0;
        for (long c = 0; c < static_cast<long>(table_.size()); ++c)
            if (alive(c)) remap[c] = live++;
        CosetTable out;
        out.ngens = ngens_;
        out.table.assign(static_cast<std::size_t>(live),
                         std::vector<long>(ncols_, -1));
        for (long c = 0; c < static_cast<long>(table_.size()); ++c) {
            if (!alive(c)) continue;
            for (std::size_t x = 0; x < ncols_; ++x) {
                long d = table_[c][x];
                if (d == -1)
                    throw std::logic_error("coset table not closed after HLT pass");
                out.table[remap[c]][x] = remap[rep(d)];
            }
        }
        return out;
    }

    long ngens_;
    std::size_t ncols_;
    long limit_;
    std::vector<std::vector<std::size_t>> relators_;
    std::vector<std::vector<std::size_t>> subgens_;
    std::vector<std::vector<long>> table_;
    std::vector<long> p_;
    std::deque<long> dead_;
};

} // namespace

Word free_reduce(const Word& w) {
    Word out;
    for (int letter : w) {
        if (letter == 0) throw std::invalid_argument("zero letter in word");
        if (!out.empty() && out.back() == -letter)
            out.pop_back();
        else
            out.push_back(letter);
    }
    return out;
}

FpGroup presentation_group(const tri::TrianglePresentation& p) {
    FpGroup g;
    g.ngens = p.gens();
    g.relators.reserve(p.triples().size());
    for (const auto& t : p.triples())
        g.relators.push_back({static_cast<int>(t[0]) + 1,
                              static_cast<int>(t[1]) + 1,
                              static_cast<int>(t[2]) + 1});
    return g;
}

std::vector<Word> type_preserving_subgroup_gens(const tri::TrianglePresentation& p) {
    std::vector<Word> gens;
    for (long j = 1; j < p.gens(); ++j)
        gens.push_back({static_cast<int>(j) + 1, -1});
    return gens;
}

long CosetTable::apply(long coset, int letter) const {
    return table[static_cast<std::size_t>(coset)][column(letter)];
}

CosetTable coset_enumeration(const FpGroup& g, const std::vector<Word>& subgroup_gens,
                             long coset_limit) {
    Enumerator e(g, subgroup_gens, coset_limit);
    return e.run();
}

FpGroup reidemeister_schreier(const FpGroup& g, const CosetTable& table) {
    const long index = table.index();
    const long n = table.ngens;

    // Schreier tree by breadth-first search, generator 0 forward first, so
    // the transversal rep of a coset is its shortlex-minimal positive word.
    std::vector<std::pair<long, long>> tree_edge(static_cast<std::size_t>(index),
                                                 {-1, -1}); // (coset, gen)
    std::vector<char> seen(static_cast<std::size_t>(index), 0);
    std::deque<long> bfs{0};
    seen[0] = 1;
    while (!bfs.empty()) {
        long c = bfs.front();
        bfs.pop_front();
        for (long gen = 0; gen < n; ++gen) {
            long d = table.table[static_cast<std::size_t>(c)]
                                [2 * static_cast<std::size_t>(gen)];
            if (!seen[static_cast<std::size_t>(d)]) {
                seen[static_cast<std::size_t>(d)] = 1;
                tree_edge[static_cast<std::size_t>(d)] = {c, gen};
                bfs.push_back(d);
            }
        }
    }
    for (char s : seen)
        if (!s) throw std::logic_error("coset table is not transitive");

    // Schreier generators: one per non-tree forward edge (coset, gen).
    std::vector<std::vector<long>> sgen(
        static_cast<std::size_t>(index), std::vector<long>(static_cast<std::size_t>(n), -1));
    long count = 0;
    for (long c = 0; c < index; ++c)
        for (long gen = 0; gen < n; ++gen) {
            long d = table.table[static_cast<std::size_t>(c)]
                                [2 * static_cast<std::size_t>(gen)];
            if (tree_edge[static_cast<std::size_t>(d)] == std::make_pair(c, gen))
                continue; // trivial Schreier generator
            sgen[static_cast<std::size_t>(c)][static_cast<std::size_t>(gen)] = count++;
        }

    FpGroup sub;
    sub.ngens = count;
    // rewrite each relator of g from each coset
    for (long c = 0; c < index; ++c) {
        for (const auto& r : g.relators) {
            Word w;
            long u = c;
            for (int letter : r) {
                if (letter > 0) {
                    long gen = letter - 1;
                    long k = sgen[static_cast<std::size_t>(u)][static_cast<std::size_t>(gen)];
                    if (k != -1) w.push_back(static_cast<int>(k) + 1);
                    u = table.table[static_cast<std::size_t>(u)]
                                   [2 * static_cast<std::size_t>(gen)];
                } else {
                    long gen = -letter - 1;
                    long v = table.table[static_cast<std::size_t>(u)]
                                        [2 * static_cast<std::size_t>(gen) + 1];
                    long k = sgen[static_cast<std::size_t>(v)][static_cast<std::size_t>(gen)];
                    if (k != -1) w.push_back(-(static_cast<int>(k) + 1));
                    u = v;
                }
            }
            if (u != c)
                throw std::logic_error("relator does not stabilize its coset");
            w = free_reduce(w);
            if (!w.empty()) sub.relators.push_back(std::move(w));
        }
    }
    return sub;
}

AbelianGroup abelianization(const FpGroup& g) {
    const std::size_t ngens = static_cast<std::size_t>(g.ngens);
    const std::size_t nrels = std::max<std::size_t>(g.relators.size(), 1);
    exact::IntMatrix m(nrels, ngens);
    for (std::size_t r = 0; r < g.relators.size(); ++r)
        for (int letter : g.relators[r]) {
            std::size_t gen = static_cast<std::size_t>(std::abs(letter)) - 1;
            m.at(r, gen) += (letter > 0) ? 1 : -1;
        }
    return exact::cokernel(m);
}

} // namespace coinv::fp
