#pragma once
// Stochastic-block-model inference on the pruned author graph by
// minimization of the microcanonical description length, in nats.
//
// The description length of a directed multigraph A under assignment b is
//
//   DL = S_edges + S_partition + S_matrix (+ S_degrees when degree-corrected)
//
// with block edge counts e_rs, block in/out sums e_r^-, e_r^+, sizes n_r,
// B non-empty blocks, N nodes and E total edge weight:
//
//   S_edges(DC)  = sum_r [lnG(e_r^+ +1) + lnG(e_r^- +1)] - sum_rs lnG(e_rs+1)
//                  - sum_i [lnG(k_i^+ +1) + lnG(k_i^- +1)] + sum_ij lnG(A_ij+1)
//   S_edges(std) = sum_r (e_r^+ + e_r^-) ln n_r - sum_rs lnG(e_rs+1)
//                  + sum_ij lnG(A_ij+1)
//   S_partition  = ln C(N-1, B-1) + ln N + lnG(N+1) - sum_r lnG(n_r+1)
//   S_matrix     = ln C(B^2 + E - 1, E)
//   S_degrees    = sum_r [ln C(n_r+e_r^+ -1, e_r^+) + ln C(n_r+e_r^- -1, e_r^-)]
//
// where lnG is the log-gamma function and C the binomial coefficient.

#include <cstdint>
#include <map>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "claimnet/author_graph.hpp"

namespace claimnet {

enum class DlVariant { Standard, DegreeCorrected };

std::string dl_variant_name(DlVariant v);

class EmptyGraphError : public std::runtime_error {
public:
    EmptyGraphError() : std::runtime_error("cannot infer blocks on an empty graph") {}
};

class IncompleteAssignmentError : public std::runtime_error {
public:
    explicit IncompleteAssignmentError(const std::string& what) : std::runtime_error(what) {}
};

// Indexed immutable view of a weighted directed multigraph; node order is
// the sorted author-id order, so everything downstream is deterministic.
struct MultiDigraph {
    std::vector<std::string> ids;
    std::vector<std::vector<std::pair<int, long>>> out; // (target, weight), sorted
    std::vector<std::vector<std::pair<int, long>>> in;  // (source, weight), sorted
    std::vector<long> k_out;
    std::vector<long> k_in;
    long total_weight = 0;

    static MultiDigraph from_pruned(const PrunedAuthorGraph& g, bool binarize = false);
    static MultiDigraph from_edges(int num_nodes,
                                   const std::vector<std::tuple<int, int, long>>& edges);

    int num_nodes() const { return static_cast<int>(ids.size()); }
};

double description_length(const MultiDigraph& g, const std::vector<int>& assignment,
                          DlVariant variant);

// Mutable partition bookkeeping with O(deg) incremental deltas. Blocks are
// slots 0..N-1, possibly empty; empty slots may be reopened by moves.
class BlockState {
public:
    BlockState(const MultiDigraph& g, std::vector<int> assignment, DlVariant variant);

    double dl() const { return dl_; }
    double recompute_dl() const; // from scratch, for consistency checks

    int block_of(int v) const { return b_[v]; }
    const std::vector<int>& assignment() const { return b_; }
    int num_blocks() const { return num_nonempty_; }
    long block_size(int r) const { return n_[r]; }
    std::vector<int> nonempty_blocks() const;
    int lowest_empty_block() const; // -1 when none

    // Delta of moving node v to block `to` (may be an empty slot).
    double move_delta(int v, int to) const;
    void apply_move(int v, int to);

    // Delta of merging all of block r into block s.
    double merge_delta(int r, int s) const;
    void apply_merge(int r, int s);

private:
    struct Touched; // scratch for delta evaluation

    double partition_terms(long nr, long ns, int B) const;
    double size_terms(int block, long size, long ep, long em) const;

    const MultiDigraph* g_;
    DlVariant variant_;
    std::vector<int> b_;
    std::vector<long> n_;
    std::vector<std::map<int, long>> row_; // row_[r][s] = e_rs
    std::vector<std::map<int, long>> col_; // col_[s][r] = e_rs
    std::vector<long> ep_;                 // e_r^+
    std::vector<long> em_;                 // e_r^-
    std::set<int> empty_blocks_;
    int num_nonempty_ = 0;
    double const_term_ = 0.0;
    double dl_ = 0.0;
};

struct Partition {
    std::map<std::string, int> assignment;
    int num_blocks = 0;
    double dl = 0.0;
    std::uint64_t seed = 0;
    DlVariant variant = DlVariant::DegreeCorrected;

    std::vector<std::set<std::string>> members() const;
};

struct InferParams {
    long restarts = 100;
    DlVariant variant = DlVariant::DegreeCorrected;
    std::uint64_t seed = 0;
    int workers = 0; // 0 = hardware concurrency
};

// Multi-restart search: every restart runs an independent chain
// (agglomerative merges from singletons, then annealed single-node sweeps,
// then a greedy polish) and the minimum-DL partition wins. Chains are
// seeded from (seed, chain index), so results do not depend on the worker
// count and a larger restart budget can only improve the result.
Partition infer(const MultiDigraph& g, const InferParams& params);

struct ModelSelection {
    double dl_standard = 0.0;
    double dl_degree_corrected = 0.0;
    DlVariant selected = DlVariant::Standard; // ties break to Standard
    Partition partition_standard;
    Partition partition_degree_corrected;
};

ModelSelection model_select(const MultiDigraph& g, const InferParams& params);

struct BlockMetaGraph {
    struct Cell {
        int r = 0;
        int s = 0;
        long weight = 0;
        double p = 0.0; // weight / (n_r * n_s)
        bool hidden = false;
    };
    int num_blocks = 0;
    double threshold = 0.01;
    std::vector<long> block_sizes;
    std::vector<Cell> cells; // all ordered pairs, diagonal included
};

BlockMetaGraph meta_graph(const PrunedAuthorGraph& g, const Partition& p,
                          double threshold = 0.01);

struct BlockAlignment {
    std::vector<int> early_to_final;
    std::vector<double> jaccard;
    bool degenerate = false; // all Jaccard similarities were zero
};

// Maps every early block to the final block with the highest Jaccard
// similarity over the shared node set; ties prefer the larger final block,
// then the lower index.
BlockAlignment align_blocks(const Partition& early, const Partition& final_partition);

} // namespace claimnet
