#include "anet/semigroup.hpp"

#include <algorithm>
#include <atomic>
#include <cstdio>
#include <cstring>
#include <fstream>
#include <thread>

namespace anet::semigroup {

const char* mode_name(UpdateMode m)
{
    switch (m) {
    case UpdateMode::Sequential: return "sequential";
    case UpdateMode::Asynchronous: return "asynchronous";
    case UpdateMode::Synchronous: return "synchronous";
    }
    return "?";
}

std::vector<Network> GeneratorSet::expand() const
{
    std::vector<Network> out;
    for (const Network& f : base) {
        if (!(f.params == params)) fail(errc::invalid_params, "generator set mixes parameters");
        switch (mode) {
        case UpdateMode::Sequential:
            for (int v = 1; v <= params.n; ++v) out.push_back(masked_update(f, 1u << (v - 1)));
            break;
        case UpdateMode::Asynchronous:
            for (std::uint32_t m = 1; m < (1u << params.n); ++m) out.push_back(masked_update(f, m));
            break;
        case UpdateMode::Synchronous:
            out.push_back(f);
            break;
        }
    }
    std::sort(out.begin(), out.end(), [](const Network& a, const Network& b) { return a.table < b.table; });
    out.erase(std::unique(out.begin(), out.end(), [](const Network& a, const Network& b) { return a.table == b.table; }), out.end());
    return out;
}

namespace {

std::uint64_t table_hash(const std::vector<Config>& t)
{
    std::uint64_t h = 1469598103934665603ull;
    for (Config c : t) {
        h ^= c;
        h *= 1099511628211ull;
    }
    return h;
}

} // namespace

std::size_t Closure::size() const { return dense_mode_ ? dense_.members.size() : tables_.size(); }

std::optional<std::size_t> Closure::find_hashed(const std::vector<Config>& t) const
{
    const auto it = index_.find(table_hash(t));
    if (it == index_.end()) return std::nullopt;
    for (std::uint32_t id : it->second)
        if (tables_[id] == t) return id;
    return std::nullopt;
}

bool Closure::contains(const Network& g) const { return member_id(g).has_value(); }

std::optional<std::size_t> Closure::member_id(const Network& g) const
{
    if (!(g.params == params_)) return std::nullopt;
    if (dense_mode_) {
        const auto c = dense::pack(dense::from_network(g), dense_.space);
        const auto id = dense_.id_of[c];
        if (id < 0) return std::nullopt;
        return static_cast<std::size_t>(id);
    }
    return find_hashed(g.table);
}

Network Closure::member(std::size_t id) const
{
    if (dense_mode_) return dense::to_network(dense::unpack(dense_.members[id], dense_.space), params_);
    return Network{params_, tables_[id]};
}

std::optional<std::vector<int>> Closure::witness_word(const Network& g) const
{
    const auto id = member_id(g);
    if (!id) return std::nullopt;
    std::vector<int> word;
    if (dense_mode_) {
        word = dense_.witness_word(dense_.members[*id]);
    } else {
        std::int32_t cur = static_cast<std::int32_t>(*id);
        while (cur >= 0) {
            word.push_back(witness_[static_cast<std::size_t>(cur)].second);
            cur = witness_[static_cast<std::size_t>(cur)].first;
        }
        std::reverse(word.begin(), word.end());
    }
    return word;
}

std::vector<std::uint64_t> Closure::depth_histogram() const
{
    std::vector<std::uint64_t> h;
    const auto bump = [&](std::uint32_t d) {
        if (h.size() <= d) h.resize(d + 1, 0);
        ++h[d];
    };
    if (dense_mode_)
        for (std::uint32_t d : dense_.depth) bump(d);
    else
        for (std::uint32_t d : depth_) bump(d);
    return h;
}

Closure close(const GeneratorSet& gens, std::uint64_t member_limit)
{
    if (member_limit < 1) fail(errc::invalid_params, "member_limit must be >= 1");
    Closure cl;
    cl.params_ = gens.params;
    cl.gens_ = gens.expand();
    if (cl.gens_.empty()) fail(errc::invalid_params, "empty generator set");

    if (dense::Space::usable(gens.params)) {
        cl.dense_mode_ = true;
        std::vector<dense::Table> tabs;
        tabs.reserve(cl.gens_.size());
        for (const Network& g : cl.gens_) tabs.push_back(dense::from_network(g));
        cl.dense_ = dense::close(gens.params, tabs, member_limit, /*track_witness=*/true);
        return cl;
    }

    // Hashed-index closure, same incremental scheme as the dense engine.
    const auto insert = [&](std::vector<Config> t, std::int32_t parent, std::int32_t gi, std::uint32_t d) -> std::int32_t {
        if (cl.find_hashed(t)) return -1;
        if (cl.tables_.size() >= member_limit) fail(errc::limit_exceeded, "closure exceeds member limit " + std::to_string(member_limit));
        const auto id = static_cast<std::int32_t>(cl.tables_.size());
        cl.index_[table_hash(t)].push_back(static_cast<std::uint32_t>(id));
        cl.tables_.push_back(std::move(t));
        cl.witness_.emplace_back(parent, gi);
        cl.depth_.push_back(d);
        return id;
    };
    const auto compose_tables = [&](const std::vector<Config>& g, const std::vector<Config>& f) {
        std::vector<Config> r(f.size());
        for (std::size_t x = 0; x < f.size(); ++x) r[x] = g[f[x]];
        return r;
    };

    std::vector<std::uint32_t> active;
    std::size_t expand_from = 0;
    for (std::size_t gi = 0; gi < cl.gens_.size(); ++gi) {
        const auto& g = cl.gens_[gi].table;
        if (cl.find_hashed(g)) continue;
        insert(g, -1, static_cast<std::int32_t>(gi), 1);
        const std::size_t pre_existing = cl.tables_.size() - 1;
        active.push_back(static_cast<std::uint32_t>(gi));
        for (std::size_t mi = 0; mi < pre_existing; ++mi)
            insert(compose_tables(g, cl.tables_[mi]), static_cast<std::int32_t>(mi), static_cast<std::int32_t>(gi), cl.depth_[mi] + 1);
        while (expand_from < cl.tables_.size()) {
            const std::size_t mi = expand_from++;
            for (std::uint32_t ai : active)
                insert(compose_tables(cl.gens_[ai].table, cl.tables_[mi]), static_cast<std::int32_t>(mi),
                       static_cast<std::int32_t>(ai), cl.depth_[mi] + 1);
        }
    }
    return cl;
}

Network replay_word(std::span<const int> word, const std::vector<Network>& gens, const Params& p)
{
    Network r = Network::identity(p);
    for (int gi : word) {
        if (gi < 0 || static_cast<std::size_t>(gi) >= gens.size()) fail(errc::invalid_params, "witness word references unknown generator");
        r = compose(gens[static_cast<std::size_t>(gi)], r);
    }
    return r;
}

namespace {

// Sequential generator tables of a dense candidate, deduplicated in place.
// Returns the number of distinct generators; coord[i] = 1-based coordinate.
int seq_generators(dense::Table f, const Params& p, dense::Table gens[], int coord[])
{
    int k = 0;
    for (int v = 1; v <= p.n; ++v) {
        const dense::Table t = dense::masked_table(f, 1u << (v - 1), p);
        bool dup = false;
        for (int i = 0; i < k; ++i)
            if (gens[i] == t) dup = true;
        if (!dup) {
            gens[k] = t;
            coord[k] = v;
            ++k;
        }
    }
    return k;
}

struct DenseSweeper {
    Params p;
    dense::Space sp;
    std::vector<std::uint32_t> visit;
    std::uint32_t epoch = 0;
    std::vector<dense::Table> stack;

    explicit DenseSweeper(const Params& params) : p(params), sp(dense::Space::make(params)), visit(sp.codes, 0) {}

    void begin()
    {
        if (++epoch == 0) {
            std::fill(visit.begin(), visit.end(), 0u);
            epoch = 1;
        }
        stack.clear();
    }

    bool mark(dense::Code c)
    {
        if (visit[c] == epoch) return false;
        visit[c] = epoch;
        return true;
    }
};

} // namespace

SimResult sequentially_simulatable(const Network& g, SimStrategy strategy, const SimLimits& limits)
{
    const Params& p = g.params;
    SimResult res;
    if (!dense::Space::usable(p)) {
        res.verdict = SimVerdict::Unknown;
        res.note = "q^n > 8: full simulator sweep not supported at this scale";
        return res;
    }
    const dense::Space sp = dense::Space::make(p);
    const dense::Code target = dense::pack(dense::from_network(g), sp);
    DenseSweeper sweep(p);
    std::vector<std::uint64_t> covered;
    std::uint64_t covered_count = 0;
    if (strategy == SimStrategy::GreedyCover) covered.assign((sp.codes + 63) / 64, 0);

    dense::Table gens[32];
    int coord[32];
    for (dense::Code cand = 0; cand < sp.codes; ++cand) {
        if (res.candidates_tried >= limits.candidate_limit) {
            res.verdict = SimVerdict::Unknown;
            res.note = "candidate limit reached";
            return res;
        }
        ++res.candidates_tried;
        const dense::Table f = dense::unpack(cand, sp);
        const int k = seq_generators(f, p, gens, coord);
        sweep.begin();
        bool found = false;
        std::uint64_t members = 0;
        for (int i = 0; i < k; ++i) {
            const dense::Code c = dense::pack(gens[i], sp);
            if (sweep.mark(c)) {
                sweep.stack.push_back(gens[i]);
                ++members;
                if (c == target) found = true;
                if (!covered.empty() && !((covered[c >> 6] >> (c & 63)) & 1)) {
                    covered[c >> 6] |= std::uint64_t{1} << (c & 63);
                    ++covered_count;
                }
            }
        }
        while (!sweep.stack.empty() && !found) {
            const dense::Table t = sweep.stack.back();
            sweep.stack.pop_back();
            for (int i = 0; i < k; ++i) {
                const dense::Table nt = dense::compose(gens[i], t, sp.m);
                const dense::Code nc = dense::pack(nt, sp);
                if (sweep.mark(nc)) {
                    if (++members > limits.member_limit) {
                        res.verdict = SimVerdict::Unknown;
                        res.note = "member limit reached while closing candidate " + std::to_string(cand);
                        return res;
                    }
                    sweep.stack.push_back(nt);
                    if (nc == target) {
                        found = true;
                        break;
                    }
                    if (!covered.empty() && !((covered[nc >> 6] >> (nc & 63)) & 1)) {
                        covered[nc >> 6] |= std::uint64_t{1} << (nc & 63);
                        ++covered_count;
                    }
                }
            }
        }
        if (found) {
            // Certify by replay through the witness-tracking closure.
            std::vector<dense::Table> gtabs(gens, gens + k);
            const dense::Closure cl = dense::close(p, gtabs, limits.member_limit, /*track_witness=*/true);
            const auto word = cl.witness_word(target);
            UpdateWord w;
            for (int gi : word) w.steps.push_back(1u << (coord[gi] - 1));
            const Network f_net = dense::to_network(f, p);
            if (!(word_apply(f_net, w) == g)) fail(errc::limit_exceeded, "internal: witness replay mismatch");
            res.verdict = SimVerdict::Yes;
            res.simulator = f_net;
            res.word = std::move(w);
            return res;
        }
    }
    res.verdict = SimVerdict::No;
    res.note = strategy == SimStrategy::Exhaustive ? "exhaustive sweep over F(n,q)" : "all candidates exhausted";
    return res;
}

namespace {

ObstructionReport obstruction_sweep(const Params& p, std::uint64_t member_limit,
                                    const std::vector<dense::Code>& targets,
                                    const std::function<std::string(dense::Table)>& classify)
{
    if (!dense::Space::usable(p)) fail(errc::limit_exceeded, "obstruction sweep needs q^n <= 8");
    const dense::Space sp = dense::Space::make(p);
    ObstructionReport rep;
    rep.params = p;

    DenseSweeper sweep(p);
    std::vector<dense::Table> gens;
    for (dense::Code cand = 0; cand < sp.codes; ++cand) {
        const dense::Table f = dense::unpack(cand, sp);
        gens.clear();
        for (std::uint32_t m = 1; m < (1u << p.n); ++m) {
            const dense::Table t = dense::masked_table(f, m, p);
            if (std::find(gens.begin(), gens.end(), t) == gens.end()) gens.push_back(t);
        }
        sweep.begin();
        std::uint64_t members = 0;
        for (const dense::Table& t : gens) {
            if (sweep.mark(dense::pack(t, sp))) {
                sweep.stack.push_back(t);
                ++members;
            }
        }
        while (!sweep.stack.empty()) {
            const dense::Table t = sweep.stack.back();
            sweep.stack.pop_back();
            for (const dense::Table& gt : gens) {
                const dense::Table nt = dense::compose(gt, t, sp.m);
                const dense::Code nc = dense::pack(nt, sp);
                if (sweep.mark(nc)) {
                    if (++members > member_limit) fail(errc::limit_exceeded, "obstruction sweep exceeded member limit");
                    sweep.stack.push_back(nt);
                }
            }
        }
        ObstructionEntry entry;
        entry.candidate = cand;
        bool missing_found = false;
        for (dense::Code t : targets) {
            if (sweep.visit[t] != sweep.epoch) {
                entry.missing = t;
                missing_found = true;
                break;
            }
        }
        if (!missing_found) {
            rep.all_obstructed = false;
            entry.reason = "candidate covers the whole target set";
        } else if (classify) {
            entry.reason = classify(f);
        }
        rep.entries.push_back(std::move(entry));
        ++rep.candidates;
    }
    return rep;
}

} // namespace

ObstructionReport verify_no_async_singular(const Params& p, std::uint64_t member_limit)
{
    const dense::Space sp = dense::Space::make(p);
    std::vector<dense::Code> sing;
    for (dense::Code c = 0; c < sp.codes; ++c)
        if (dense::rank_of(dense::unpack(c, sp), sp.m) < sp.m) sing.push_back(c);
    return obstruction_sweep(p, member_limit, sing, nullptr);
}

ObstructionReport verify_T_obstruction(const Params& p, std::uint64_t member_limit)
{
    const dense::Space sp = dense::Space::make(p);
    std::vector<dense::Code> t_set;
    for (dense::Code c = 0; c < sp.codes; ++c)
        if (dense::rank_of(dense::unpack(c, sp), sp.m) != sp.m - 1) t_set.push_back(c);

    const auto classify = [p, sp](dense::Table f) -> std::string {
        const Network net = dense::to_network(f, p);
        for (int v = 1; v <= p.n; ++v)
            if (!coordinate_balanced(net, v)) return "coordinate " + std::to_string(v) + " unbalanced";
        return "all coordinates balanced; no type-I map reachable";
    };
    return obstruction_sweep(p, member_limit, t_set, classify);
}

namespace {

// Configuration-space symmetries (coordinate permutations composed with
// per-coordinate digit permutations) conjugate sequential closures to
// sequential closures, so coverage of a map certifies its whole orbit.
std::vector<std::pair<dense::Table, dense::Table>> build_conjugators(const Params& p)
{
    std::vector<int> coord_perm(static_cast<std::size_t>(p.n));
    for (int i = 0; i < p.n; ++i) coord_perm[static_cast<std::size_t>(i)] = i + 1;
    std::vector<int> digit_perm(static_cast<std::size_t>(p.q));

    std::vector<std::pair<dense::Table, dense::Table>> out;
    do {
        // odometer over one digit permutation per coordinate
        std::vector<std::vector<int>> perms(static_cast<std::size_t>(p.n));
        std::vector<std::size_t> idx(static_cast<std::size_t>(p.n), 0);
        std::vector<std::vector<int>> all_digit_perms;
        for (int d = 0; d < p.q; ++d) digit_perm[static_cast<std::size_t>(d)] = d;
        do all_digit_perms.push_back(digit_perm);
        while (std::next_permutation(digit_perm.begin(), digit_perm.end()));

        while (true) {
            dense::Table sigma = 0, sigma_inv = 0;
            for (Config x = 0; x < p.size; ++x) {
                Config y = 0;
                for (int i = 1; i <= p.n; ++i) {
                    const int src = coord_perm[static_cast<std::size_t>(i - 1)];
                    y += static_cast<Config>(all_digit_perms[idx[static_cast<std::size_t>(i - 1)]][static_cast<std::size_t>(p.digit(x, src))]) * p.place(i);
                }
                sigma = dense::with_entry(sigma, static_cast<int>(x), static_cast<int>(y));
                sigma_inv = dense::with_entry(sigma_inv, static_cast<int>(y), static_cast<int>(x));
            }
            out.emplace_back(sigma, sigma_inv);
            int c = 0;
            for (; c < p.n; ++c) {
                if (++idx[static_cast<std::size_t>(c)] < all_digit_perms.size()) break;
                idx[static_cast<std::size_t>(c)] = 0;
            }
            if (c == p.n) break;
        }
    } while (std::next_permutation(coord_perm.begin(), coord_perm.end()));
    return out;
}

constexpr char cover_magic[8] = {'A', 'N', 'E', 'T', 'G', 'C', '0', '1'};

struct CoverCheckpoint {
    std::uint32_t n = 0, q = 0;
    std::uint64_t codes = 0;
    std::uint64_t next_candidate = 0;
    std::uint64_t covered_count = 0;
};

bool load_checkpoint(const std::string& path, CoverCheckpoint& hdr, std::vector<std::uint64_t>& covered)
{
    std::ifstream in(path, std::ios::binary);
    if (!in) return false;
    char magic[8];
    in.read(magic, 8);
    if (!in || std::memcmp(magic, cover_magic, 8) != 0) fail(errc::parse_error, "bad checkpoint magic in " + path);
    in.read(reinterpret_cast<char*>(&hdr), sizeof hdr);
    covered.assign((hdr.codes + 63) / 64, 0);
    in.read(reinterpret_cast<char*>(covered.data()), static_cast<std::streamsize>(covered.size() * 8));
    if (!in) fail(errc::parse_error, "truncated checkpoint " + path);
    return true;
}

void save_checkpoint(const std::string& path, const CoverCheckpoint& hdr, const std::vector<std::uint64_t>& covered)
{
    const std::string tmp = path + ".tmp";
    {
        std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
        if (!out) fail(errc::io_error, "cannot write checkpoint " + tmp);
        out.write(cover_magic, 8);
        out.write(reinterpret_cast<const char*>(&hdr), sizeof hdr);
        out.write(reinterpret_cast<const char*>(covered.data()), static_cast<std::streamsize>(covered.size() * 8));
        if (!out) fail(errc::io_error, "checkpoint write failed: " + tmp);
    }
    std::rename(tmp.c_str(), path.c_str());
}

} // namespace

CoverAllReport cover_all_sequential(const Params& p, const CoverOptions& opt)
{
    if (!dense::Space::usable(p)) fail(errc::limit_exceeded, "cover sweep needs q^n <= 8");
    const dense::Space sp = dense::Space::make(p);

    CoverAllReport rep;
    rep.params = p;
    rep.total = sp.codes;

    std::vector<std::uint64_t> covered((sp.codes + 63) / 64, 0);
    std::uint64_t covered_count = 0;
    std::uint64_t start = 0;

    if (!opt.checkpoint_path.empty()) {
        CoverCheckpoint hdr;
        if (load_checkpoint(opt.checkpoint_path, hdr, covered)) {
            if (hdr.n != static_cast<std::uint32_t>(p.n) || hdr.q != static_cast<std::uint32_t>(p.q) || hdr.codes != sp.codes)
                fail(errc::parse_error, "checkpoint parameters do not match");
            covered_count = hdr.covered_count;
            start = hdr.next_candidate;
            rep.resumed = true;
        }
    }

    const int threads = std::max(1, opt.threads);
    std::uint64_t budget = opt.candidate_budget;

    const auto cover_mark = [&covered](dense::Code c) -> bool {
        auto& word = covered[c >> 6];
        const std::uint64_t bit = std::uint64_t{1} << (c & 63);
        if (word & bit) return false;
        word |= bit;
        return true;
    };
    const auto conjugators = opt.use_symmetry ? build_conjugators(p) : std::vector<std::pair<dense::Table, dense::Table>>{};

    if (threads == 1) {
        DenseSweeper sweep(p);
        dense::Table gens[32];
        int coord[32];
        std::uint64_t since_checkpoint = 0;
        std::uint64_t cand = start;
        const auto cover_orbit = [&](dense::Table t, dense::Code c) {
            if (!cover_mark(c)) return; // covered before: its orbit is already marked
            ++covered_count;
            for (const auto& [sg, sg_inv] : conjugators) {
                const dense::Code cc = dense::pack(dense::compose(sg, dense::compose(t, sg_inv, sp.m), sp.m), sp);
                if (cover_mark(cc)) ++covered_count;
            }
        };
        for (; cand < sp.codes && covered_count < sp.codes && budget > 0; ++cand, --budget) {
            const dense::Table f = dense::unpack(static_cast<dense::Code>(cand), sp);
            const int k = seq_generators(f, p, gens, coord);
            sweep.begin();
            for (int i = 0; i < k; ++i) {
                const dense::Code c = dense::pack(gens[i], sp);
                if (sweep.mark(c)) {
                    sweep.stack.push_back(gens[i]);
                    cover_orbit(gens[i], c);
                }
            }
            while (!sweep.stack.empty()) {
                const dense::Table t = sweep.stack.back();
                sweep.stack.pop_back();
                for (int i = 0; i < k; ++i) {
                    const dense::Table nt = dense::compose(gens[i], t, sp.m);
                    const dense::Code nc = dense::pack(nt, sp);
                    if (sweep.mark(nc)) {
                        sweep.stack.push_back(nt);
                        cover_orbit(nt, nc);
                    }
                }
            }
            ++rep.candidates_used;
            if (!opt.checkpoint_path.empty() && ++since_checkpoint >= opt.checkpoint_stride) {
                since_checkpoint = 0;
                save_checkpoint(opt.checkpoint_path,
                                CoverCheckpoint{static_cast<std::uint32_t>(p.n), static_cast<std::uint32_t>(p.q), sp.codes, cand + 1, covered_count},
                                covered);
            }
            if (opt.progress && (cand & 0xffff) == 0) opt.progress(cand, covered_count, sp.codes);
        }
        if (!opt.checkpoint_path.empty())
            save_checkpoint(opt.checkpoint_path,
                            CoverCheckpoint{static_cast<std::uint32_t>(p.n), static_cast<std::uint32_t>(p.q), sp.codes, cand, covered_count},
                            covered);
    } else {
        // Disjoint candidate chunks; the covered set is shared. The final
        // verdict does not depend on the schedule. No checkpointing here.
        std::vector<std::atomic<std::uint64_t>> shared((sp.codes + 63) / 64);
        for (std::size_t i = 0; i < shared.size(); ++i) shared[i].store(covered[i], std::memory_order_relaxed);
        std::atomic<std::uint64_t> shared_count{covered_count};
        std::atomic<std::uint64_t> next{start};
        std::atomic<std::uint64_t> used{0};
        const std::uint64_t chunk = 1024;
        const std::uint64_t end = (budget == ~std::uint64_t{0}) ? sp.codes : std::min<std::uint64_t>(sp.codes, start + budget);

        const auto conjugators = opt.use_symmetry ? build_conjugators(p) : std::vector<std::pair<dense::Table, dense::Table>>{};
        const auto worker = [&]() {
            DenseSweeper sweep(p);
            dense::Table gens[32];
            int coord[32];
            const auto cover_shared = [&](dense::Code c) {
                const std::uint64_t bit = std::uint64_t{1} << (c & 63);
                const std::uint64_t old = shared[c >> 6].fetch_or(bit, std::memory_order_relaxed);
                if (!(old & bit)) shared_count.fetch_add(1, std::memory_order_relaxed);
            };
            const auto cover_first = [&](dense::Code c) {
                const std::uint64_t bit = std::uint64_t{1} << (c & 63);
                const std::uint64_t old = shared[c >> 6].fetch_or(bit, std::memory_order_relaxed);
                if (old & bit) return false;
                shared_count.fetch_add(1, std::memory_order_relaxed);
                return true;
            };
            const auto cover_orbit = [&](dense::Table t, dense::Code c) {
                if (!cover_first(c)) return;
                for (const auto& [sg, sg_inv] : conjugators)
                    cover_shared(dense::pack(dense::compose(sg, dense::compose(t, sg_inv, sp.m), sp.m), sp));
            };
            while (true) {
                const std::uint64_t c0 = next.fetch_add(chunk);
                if (c0 >= end || shared_count.load(std::memory_order_relaxed) >= sp.codes) return;
                const std::uint64_t c1 = std::min<std::uint64_t>(end, c0 + chunk);
                for (std::uint64_t cand = c0; cand < c1; ++cand) {
                    if (shared_count.load(std::memory_order_relaxed) >= sp.codes) return;
                    const dense::Table f = dense::unpack(static_cast<dense::Code>(cand), sp);
                    const int k = seq_generators(f, p, gens, coord);
                    sweep.begin();
                    for (int i = 0; i < k; ++i) {
                        const dense::Code c = dense::pack(gens[i], sp);
                        if (sweep.mark(c)) {
                            sweep.stack.push_back(gens[i]);
                            cover_orbit(gens[i], c);
                        }
                    }
                    while (!sweep.stack.empty()) {
                        const dense::Table t = sweep.stack.back();
                        sweep.stack.pop_back();
                        for (int i = 0; i < k; ++i) {
                            const dense::Table nt = dense::compose(gens[i], t, sp.m);
                            const dense::Code nc = dense::pack(nt, sp);
                            if (sweep.mark(nc)) {
                                sweep.stack.push_back(nt);
                                cover_orbit(nt, nc);
                            }
                        }
                    }
                    used.fetch_add(1, std::memory_order_relaxed);
                }
                if (opt.progress) opt.progress(c1, shared_count.load(std::memory_order_relaxed), sp.codes);
            }
        };
        std::vector<std::thread> pool;
        for (int i = 0; i < threads; ++i) pool.emplace_back(worker);
        for (auto& t : pool) t.join();
        for (std::size_t i = 0; i < shared.size(); ++i) covered[i] = shared[i].load(std::memory_order_relaxed);
        covered_count = shared_count.load(std::memory_order_relaxed);
        rep.candidates_used = used.load(std::memory_order_relaxed);
    }

    rep.covered = covered_count;
    rep.complete = covered_count == sp.codes;
    return rep;
}

} // namespace anet::semigroup
