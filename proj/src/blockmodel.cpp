#include "claimnet/blockmodel.hpp"

#include <algorithm>
#include <cmath>
#include <thread>
#include <tuple>

#include "claimnet/rng.hpp"

namespace claimnet {

std::string dl_variant_name(DlVariant v) {
    return v == DlVariant::Standard ? "standard" : "degree-corrected";
}

namespace {

double ln_binom(long n, long k) {
    if (k == 0) return 0.0;
    if (k < 0 || n < k) throw std::logic_error("ln_binom outside support");
    return std::lgamma(static_cast<double>(n) + 1.0) -
           std::lgamma(static_cast<double>(k) + 1.0) -
           std::lgamma(static_cast<double>(n - k) + 1.0);
}

double lg(long count) { // lnGamma(count + 1)
    return std::lgamma(static_cast<double>(count) + 1.0);
}

double xlogn(long x, long n) { // x * ln(n), with 0 * ln(0) == 0
    if (x == 0) return 0.0;
    return static_cast<double>(x) * std::log(static_cast<double>(n));
}

long value_or_zero(const std::map<int, long>& m, int key) {
    const auto it = m.find(key);
    return it == m.end() ? 0 : it->second;
}

} // namespace

MultiDigraph MultiDigraph::from_pruned(const PrunedAuthorGraph& g, bool binarize) {
    MultiDigraph out;
    out.ids.assign(g.nodes.begin(), g.nodes.end());
    std::map<std::string, int> index;
    for (int i = 0; i < static_cast<int>(out.ids.size()); ++i) index[out.ids[i]] = i;
    out.out.resize(out.ids.size());
    out.in.resize(out.ids.size());
    out.k_out.assign(out.ids.size(), 0);
    out.k_in.assign(out.ids.size(), 0);
    for (const auto& [key, weight] : g.edges) {
        const int s = index.at(key.first);
        const int t = index.at(key.second);
        const long w = binarize ? 1 : weight;
        out.out[s].push_back({t, w});
        out.in[t].push_back({s, w});
        out.k_out[s] += w;
        out.k_in[t] += w;
        out.total_weight += w;
    }
    for (auto& adj : out.out) std::sort(adj.begin(), adj.end());
    for (auto& adj : out.in) std::sort(adj.begin(), adj.end());
    return out;
}

MultiDigraph MultiDigraph::from_edges(int num_nodes,
                                      const std::vector<std::tuple<int, int, long>>& edges) {
    MultiDigraph out;
    out.ids.resize(num_nodes);
    for (int i = 0; i < num_nodes; ++i) out.ids[i] = "n" + std::to_string(i);
    out.out.resize(num_nodes);
    out.in.resize(num_nodes);
    out.k_out.assign(num_nodes, 0);
    out.k_in.assign(num_nodes, 0);
    std::map<std::pair<int, int>, long> merged;
    for (const auto& [s, t, w] : edges) merged[{s, t}] += w;
    for (const auto& [key, w] : merged) {
        const auto& [s, t] = key;
        out.out[s].push_back({t, w});
        out.in[t].push_back({s, w});
        out.k_out[s] += w;
        out.k_in[t] += w;
        out.total_weight += w;
    }
    for (auto& adj : out.out) std::sort(adj.begin(), adj.end());
    for (auto& adj : out.in) std::sort(adj.begin(), adj.end());
    return out;
}

// ---------------------------------------------------------------------------
// BlockState

BlockState::BlockState(const MultiDigraph& g, std::vector<int> assignment, DlVariant variant)
    : g_(&g), variant_(variant), b_(std::move(assignment)) {
    const int n = g.num_nodes();
    if (static_cast<int>(b_.size()) != n) {
        throw IncompleteAssignmentError("assignment covers " + std::to_string(b_.size()) +
                                        " nodes, graph has " + std::to_string(n));
    }
    for (int v = 0; v < n; ++v) {
        if (b_[v] < 0 || b_[v] >= n) {
            throw IncompleteAssignmentError("block index out of range for node " +
                                            std::to_string(v));
        }
    }
    n_.assign(n, 0);
    row_.assign(n, {});
    col_.assign(n, {});
    ep_.assign(n, 0);
    em_.assign(n, 0);
    for (int v = 0; v < n; ++v) n_[b_[v]] += 1;
    for (int v = 0; v < n; ++v) {
        for (const auto& [u, w] : g.out[v]) {
            row_[b_[v]][b_[u]] += w;
            col_[b_[u]][b_[v]] += w;
            ep_[b_[v]] += w;
            em_[b_[u]] += w;
        }
    }
    for (int r = 0; r < n; ++r) {
        if (n_[r] > 0) {
            ++num_nonempty_;
        } else {
            empty_blocks_.insert(r);
        }
    }

    const_term_ = 0.0;
    for (int v = 0; v < n; ++v) {
        for (const auto& [u, w] : g.out[v]) {
            (void)u;
            const_term_ += lg(w);
        }
        if (variant_ == DlVariant::DegreeCorrected) {
            const_term_ -= lg(g.k_out[v]) + lg(g.k_in[v]);
        }
    }
    dl_ = recompute_dl();
}

// Terms of one block that depend on its size and in/out edge totals.
double BlockState::size_terms(int block, long size, long ep, long em) const {
    (void)block;
    double s = -lg(size); // partition: -lnG(n_r + 1)
    if (variant_ == DlVariant::DegreeCorrected) {
        s += lg(ep) + lg(em);
        s += ln_binom(size + ep - 1, ep) + ln_binom(size + em - 1, em);
    } else {
        s += xlogn(ep, size) + xlogn(em, size);
    }
    return s;
}

// Terms depending only on the number of non-empty blocks.
double BlockState::partition_terms(long, long, int B) const {
    const long n = g_->num_nodes();
    const long e = g_->total_weight;
    return ln_binom(n - 1, B - 1) + ln_binom(static_cast<long>(B) * B + e - 1, e);
}

double BlockState::recompute_dl() const {
    const long n = g_->num_nodes();
    double s = const_term_;
    s += std::log(static_cast<double>(n)) + lg(n); // prior over B, lnG(N+1)
    s += partition_terms(0, 0, num_nonempty_);
    for (long r = 0; r < n; ++r) {
        if (n_[r] == 0) continue;
        s += size_terms(static_cast<int>(r), n_[r], ep_[r], em_[r]);
        for (const auto& [t, w] : row_[r]) {
            (void)t;
            s -= lg(w);
        }
    }
    return s;
}

std::vector<int> BlockState::nonempty_blocks() const {
    std::vector<int> out;
    for (int r = 0; r < g_->num_nodes(); ++r) {
        if (n_[r] > 0) out.push_back(r);
    }
    return out;
}

int BlockState::lowest_empty_block() const {
    return empty_blocks_.empty() ? -1 : *empty_blocks_.begin();
}

double BlockState::move_delta(int v, int to) const {
    const int from = b_[v];
    if (to == from) return 0.0;

    std::map<std::pair<int, int>, long> delta;
    for (const auto& [u, w] : g_->out[v]) {
        if (u == v) {
            delta[{from, from}] -= w;
            delta[{to, to}] += w;
        } else {
            delta[{from, b_[u]}] -= w;
            delta[{to, b_[u]}] += w;
        }
    }
    for (const auto& [u, w] : g_->in[v]) {
        if (u == v) continue;
        delta[{b_[u], from}] -= w;
        delta[{b_[u], to}] += w;
    }

    double d = 0.0;
    for (const auto& [cell, dw] : delta) {
        if (dw == 0) continue;
        const long old_w = value_or_zero(row_[cell.first], cell.second);
        d -= lg(old_w + dw) - lg(old_w); // S_cells carries a minus sign
    }

    const long dout = g_->k_out[v];
    const long din = g_->k_in[v];
    d += size_terms(from, n_[from] - 1, ep_[from] - dout, em_[from] - din) -
         size_terms(from, n_[from], ep_[from], em_[from]);
    d += size_terms(to, n_[to] + 1, ep_[to] + dout, em_[to] + din) -
         size_terms(to, n_[to], ep_[to], em_[to]);

    int new_b = num_nonempty_;
    if (n_[from] == 1) --new_b;
    if (n_[to] == 0) ++new_b;
    if (new_b != num_nonempty_) {
        d += partition_terms(0, 0, new_b) - partition_terms(0, 0, num_nonempty_);
    }
    return d;
}

void BlockState::apply_move(int v, int to) {
    const int from = b_[v];
    if (to == from) return;
    dl_ += move_delta(v, to);

    auto adjust = [this](int r, int s, long dw) {
        if (dw == 0) return;
        long& rv = row_[r][s];
        rv += dw;
        if (rv == 0) row_[r].erase(s);
        long& cv = col_[s][r];
        cv += dw;
        if (cv == 0) col_[s].erase(r);
    };
    for (const auto& [u, w] : g_->out[v]) {
        if (u == v) {
            adjust(from, from, -w);
            adjust(to, to, w);
        } else {
            adjust(from, b_[u], -w);
            adjust(to, b_[u], w);
        }
    }
    for (const auto& [u, w] : g_->in[v]) {
        if (u == v) continue;
        adjust(b_[u], from, -w);
        adjust(b_[u], to, w);
    }
    ep_[from] -= g_->k_out[v];
    ep_[to] += g_->k_out[v];
    em_[from] -= g_->k_in[v];
    em_[to] += g_->k_in[v];
    n_[from] -= 1;
    n_[to] += 1;
    if (n_[from] == 0) {
        --num_nonempty_;
        empty_blocks_.insert(from);
    }
    if (n_[to] == 1) {
        ++num_nonempty_;
        empty_blocks_.erase(to);
    }
    b_[v] = to;
}

double BlockState::merge_delta(int r, int s) const {
    if (r == s || n_[r] == 0 || n_[s] == 0) throw std::logic_error("bad merge");

    double d = 0.0;
    // The four cells between r and s collapse onto (s, s).
    long corner_sum = 0;
    double corner_lg = 0.0;
    for (const int a : {r, s}) {
        for (const int b : {r, s}) {
            const long w = value_or_zero(row_[a], b);
            corner_sum += w;
            corner_lg += lg(w);
        }
    }
    d -= lg(corner_sum) - corner_lg;

    for (const auto& [t, w] : row_[r]) {
        if (t == r || t == s) continue;
        const long ws = value_or_zero(row_[s], t);
        d -= lg(ws + w) - lg(ws) - lg(w);
    }
    for (const auto& [t, w] : col_[r]) {
        if (t == r || t == s) continue;
        const long ws = value_or_zero(col_[s], t);
        d -= lg(ws + w) - lg(ws) - lg(w);
    }

    d += size_terms(s, n_[r] + n_[s], ep_[r] + ep_[s], em_[r] + em_[s]) -
         size_terms(r, n_[r], ep_[r], em_[r]) - size_terms(s, n_[s], ep_[s], em_[s]);
    d += partition_terms(0, 0, num_nonempty_ - 1) - partition_terms(0, 0, num_nonempty_);
    return d;
}

void BlockState::apply_merge(int r, int s) {
    dl_ += merge_delta(r, s);

    const std::map<int, long> row_r = row_[r];
    const std::map<int, long> col_r = col_[r];
    auto adjust = [this](int a, int b, long dw) {
        if (dw == 0) return;
        long& rv = row_[a][b];
        rv += dw;
        if (rv == 0) row_[a].erase(b);
        long& cv = col_[b][a];
        cv += dw;
        if (cv == 0) col_[b].erase(a);
    };
    for (const auto& [t, w] : row_r) {
        adjust(r, t, -w);
        adjust(s, t == r ? s : t, w);
    }
    for (const auto& [u, w] : col_r) {
        if (u == r) continue; // the (r, r) cell moved with the row
        adjust(u, r, -w);
        adjust(u == s ? s : u, s, w);
    }

    ep_[s] += ep_[r];
    em_[s] += em_[r];
    ep_[r] = 0;
    em_[r] = 0;
    n_[s] += n_[r];
    n_[r] = 0;
    for (int v = 0; v < g_->num_nodes(); ++v) {
        if (b_[v] == r) b_[v] = s;
    }
    --num_nonempty_;
    empty_blocks_.insert(r);
}

double description_length(const MultiDigraph& g, const std::vector<int>& assignment,
                          DlVariant variant) {
    const BlockState state(g, assignment, variant);
    return state.dl();
}

// ---------------------------------------------------------------------------
// Inference

namespace {

struct ChainResult {
    double dl = 0.0;
    std::vector<int> assignment;
};

int random_neighbor_block(const MultiDigraph& g, const BlockState& state, int v, Rng& rng) {
    const std::size_t degree = g.out[v].size() + g.in[v].size();
    if (degree == 0) return -1;
    const std::size_t pick = rng.below(degree);
    const int u = pick < g.out[v].size() ? g.out[v][pick].first
                                         : g.in[v][pick - g.out[v].size()].first;
    return state.block_of(u);
}

// With an rng: node-driven sampled merge candidates (randomizes restarts).
// Without: exhaustive over block pairs (deterministic polish).
void greedy_merge_pass(const MultiDigraph& g, BlockState& state, Rng* rng) {
    for (;;) {
        const std::vector<int> blocks = state.nonempty_blocks();
        if (blocks.size() < 2) return;
        double best = -1e-9;
        std::pair<int, int> best_pair{-1, -1};
        auto consider = [&](int r, int s) {
            if (r == s) return;
            const double d = state.merge_delta(r, s);
            if (d < best) {
                best = d;
                best_pair = {r, s};
            }
        };
        if (rng == nullptr || blocks.size() <= 16) {
            for (std::size_t i = 0; i < blocks.size(); ++i) {
                for (std::size_t j = i + 1; j < blocks.size(); ++j) {
                    consider(blocks[i], blocks[j]);
                }
            }
        } else {
            const int probes = static_cast<int>(3 * blocks.size());
            for (int probe = 0; probe < probes; ++probe) {
                const int v = rng->index(g.num_nodes());
                const int t = random_neighbor_block(g, state, v, *rng);
                consider(state.block_of(v), t >= 0 ? t : blocks[rng->index(blocks.size())]);
            }
        }
        if (best_pair.first < 0) return;
        state.apply_merge(best_pair.first, best_pair.second);
    }
}

void greedy_polish(const MultiDigraph& g, BlockState& state) {
    const int n = g.num_nodes();
    for (;;) {
        const double before = state.dl();
        for (int v = 0; v < n; ++v) {
            std::set<int> candidates;
            for (const auto& [u, w] : g.out[v]) {
                (void)w;
                candidates.insert(state.block_of(u));
            }
            for (const auto& [u, w] : g.in[v]) {
                (void)w;
                candidates.insert(state.block_of(u));
            }
            if (state.num_blocks() <= 24) {
                for (const int r : state.nonempty_blocks()) candidates.insert(r);
            }
            if (const int empty = state.lowest_empty_block(); empty >= 0) {
                candidates.insert(empty);
            }
            candidates.erase(state.block_of(v));
            int best_to = -1;
            double best = -1e-9;
            for (const int to : candidates) {
                const double d = state.move_delta(v, to);
                if (d < best) {
                    best = d;
                    best_to = to;
                }
            }
            if (best_to >= 0) state.apply_move(v, best_to);
        }
        greedy_merge_pass(g, state, nullptr);
        if (state.dl() >= before - 1e-12) return;
    }
}

ChainResult run_chain(const MultiDigraph& g, DlVariant variant, std::uint64_t seed,
                      std::uint64_t chain) {
    Rng rng(seed, chain);
    const int n = g.num_nodes();
    std::vector<int> singleton(n);
    for (int v = 0; v < n; ++v) singleton[v] = v;
    BlockState state(g, singleton, variant);

    // Agglomerative initialization from B = N downwards.
    greedy_merge_pass(g, state, &rng);

    std::vector<int> best_assignment = state.assignment();
    double best_dl = state.dl();

    // Annealed single-node sweeps: DL-improving moves always accepted,
    // worsening moves Metropolis-accepted while the temperature lasts.
    constexpr int kMaxSweeps = 1000;
    constexpr int kPatience = 50;
    double temperature = 1.0;
    int since_improvement = 0;
    std::vector<int> order(n);
    for (int v = 0; v < n; ++v) order[v] = v;
    for (int sweep = 0; sweep < kMaxSweeps && since_improvement < kPatience; ++sweep) {
        rng.shuffle(order);
        for (const int v : order) {
            int to = -1;
            if (rng.chance(0.9)) {
                to = random_neighbor_block(g, state, v, rng);
            }
            if (to < 0) {
                if (rng.chance(0.1)) to = state.lowest_empty_block();
                if (to < 0) {
                    const std::vector<int> blocks = state.nonempty_blocks();
                    to = blocks[rng.index(blocks.size())];
                }
            }
            if (to == state.block_of(v)) continue;
            const double d = state.move_delta(v, to);
            const bool accept =
                d < 0.0 || (temperature > 1e-8 && rng.uniform() < std::exp(-d / temperature));
            if (!accept) continue;
            state.apply_move(v, to);
            if (state.dl() < best_dl - 1e-12) {
                best_dl = state.dl();
                best_assignment = state.assignment();
                since_improvement = 0;
            }
        }
        ++since_improvement;
        temperature *= 0.9;
    }

    // Deterministic descent from the best point seen.
    BlockState polished(g, best_assignment, variant);
    greedy_polish(g, polished);

    ChainResult result;
    result.assignment = polished.assignment();
    result.dl = polished.recompute_dl();
    return result;
}

std::vector<int> canonical_labels(const std::vector<int>& assignment) {
    std::map<int, int> relabel;
    std::vector<int> out(assignment.size());
    for (std::size_t v = 0; v < assignment.size(); ++v) {
        const auto it = relabel.emplace(assignment[v], static_cast<int>(relabel.size())).first;
        out[v] = it->second;
    }
    return out;
}

} // namespace

Partition infer(const MultiDigraph& g, const InferParams& params) {
    if (g.num_nodes() == 0) throw EmptyGraphError();
    if (params.restarts < 1) throw std::invalid_argument("restarts must be >= 1");

    int workers = params.workers > 0 ? params.workers
                                     : static_cast<int>(std::thread::hardware_concurrency());
    if (workers < 1) workers = 1;
    workers = static_cast<int>(std::min<long>(workers, params.restarts));

    std::vector<std::pair<double, long>> scores(params.restarts);
    std::vector<std::vector<int>> assignments(params.restarts);
    auto work = [&](int worker) {
        for (long chain = worker; chain < params.restarts; chain += workers) {
            ChainResult r =
                run_chain(g, params.variant, params.seed, static_cast<std::uint64_t>(chain));
            scores[chain] = {r.dl, chain};
            assignments[chain] = std::move(r.assignment);
        }
    };
    if (workers == 1) {
        work(0);
    } else {
        std::vector<std::thread> pool;
        pool.reserve(workers);
        for (int w = 0; w < workers; ++w) pool.emplace_back(work, w);
        for (auto& t : pool) t.join();
    }

    const auto best = std::min_element(scores.begin(), scores.end());
    const std::vector<int> labels = canonical_labels(assignments[best->second]);

    Partition p;
    p.seed = params.seed;
    p.variant = params.variant;
    p.dl = description_length(g, labels, params.variant);
    p.num_blocks = 1 + *std::max_element(labels.begin(), labels.end());
    for (int v = 0; v < g.num_nodes(); ++v) p.assignment[g.ids[v]] = labels[v];
    return p;
}

ModelSelection model_select(const MultiDigraph& g, const InferParams& params) {
    ModelSelection sel;
    InferParams p = params;
    p.variant = DlVariant::Standard;
    sel.partition_standard = infer(g, p);
    sel.dl_standard = sel.partition_standard.dl;
    p.variant = DlVariant::DegreeCorrected;
    sel.partition_degree_corrected = infer(g, p);
    sel.dl_degree_corrected = sel.partition_degree_corrected.dl;
    sel.selected = sel.dl_degree_corrected < sel.dl_standard ? DlVariant::DegreeCorrected
                                                             : DlVariant::Standard;
    return sel;
}

std::vector<std::set<std::string>> Partition::members() const {
    std::vector<std::set<std::string>> out(num_blocks);
    for (const auto& [id, block] : assignment) out.at(block).insert(id);
    return out;
}

BlockMetaGraph meta_graph(const PrunedAuthorGraph& g, const Partition& p, double threshold) {
    BlockMetaGraph meta;
    meta.num_blocks = p.num_blocks;
    meta.threshold = threshold;
    meta.block_sizes.assign(p.num_blocks, 0);
    for (const auto& [id, block] : p.assignment) {
        (void)id;
        meta.block_sizes.at(block) += 1;
    }
    std::map<std::pair<int, int>, long> weight;
    for (const auto& [key, w] : g.edges) {
        weight[{p.assignment.at(key.first), p.assignment.at(key.second)}] += w;
    }
    for (int r = 0; r < meta.num_blocks; ++r) {
        for (int s = 0; s < meta.num_blocks; ++s) {
            BlockMetaGraph::Cell cell;
            cell.r = r;
            cell.s = s;
            const auto it = weight.find({r, s});
            cell.weight = it == weight.end() ? 0 : it->second;
            cell.p = static_cast<double>(cell.weight) /
                     (static_cast<double>(meta.block_sizes[r]) *
                      static_cast<double>(meta.block_sizes[s]));
            cell.hidden = cell.p <= threshold;
            meta.cells.push_back(cell);
        }
    }
    return meta;
}

BlockAlignment align_blocks(const Partition& early, const Partition& final_partition) {
    const auto early_members = early.members();
    const auto final_members = final_partition.members();
    std::set<std::string> common;
    for (const auto& [id, block] : early.assignment) {
        (void)block;
        if (final_partition.assignment.count(id)) common.insert(id);
    }

    std::vector<std::set<std::string>> final_common(final_members.size());
    for (std::size_t s = 0; s < final_members.size(); ++s) {
        for (const auto& id : final_members[s]) {
            if (common.count(id)) final_common[s].insert(id);
        }
    }

    BlockAlignment out;
    bool any_positive = false;
    for (const auto& e : early_members) {
        std::set<std::string> e_common;
        for (const auto& id : e) {
            if (common.count(id)) e_common.insert(id);
        }
        int best_block = -1;
        double best_j = 0.0;
        for (std::size_t s = 0; s < final_members.size(); ++s) {
            std::size_t inter = 0;
            for (const auto& id : e_common) inter += final_common[s].count(id);
            const std::size_t uni = e_common.size() + final_common[s].size() - inter;
            const double j = uni == 0 ? 0.0 : static_cast<double>(inter) / uni;
            bool better = false;
            if (best_block < 0 || j > best_j) {
                better = true;
            } else if (j == best_j &&
                       final_members[s].size() > final_members[best_block].size()) {
                better = true; // ties point at the larger final block
            }
            if (better) {
                best_j = j;
                best_block = static_cast<int>(s);
            }
        }
        if (best_j > 0.0) any_positive = true;
        out.early_to_final.push_back(best_block);
        out.jaccard.push_back(best_j);
    }
    out.degenerate = !any_positive;
    return out;
}

} // namespace claimnet
