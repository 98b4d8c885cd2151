#include "claimnet/pipeline.hpp"

#include <algorithm>
#include <charconv>
#include <filesystem>
#include <fstream>
#include <functional>
#include <sstream>

#include "claimnet/author_graph.hpp"
#include "claimnet/claims.hpp"
#include "claimnet/csv.hpp"
#include "claimnet/metrics.hpp"
#include "claimnet/svg.hpp"

namespace fs = std::filesystem;

namespace claimnet {

std::uint64_t fnv1a64(std::string_view bytes) {
    std::uint64_t h = 0xcbf29ce484222325ULL;
    for (const char c : bytes) {
        h ^= static_cast<unsigned char>(c);
        h *= 0x100000001b3ULL;
    }
    return h;
}

namespace {

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open file: " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

std::string hex64(std::uint64_t v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(v));
    return buf;
}

long to_long(const std::string& s, const std::string& what) {
    long out = 0;
    const std::string t = trim(s);
    auto [ptr, ec] = std::from_chars(t.data(), t.data() + t.size(), out);
    if (ec != std::errc{} || ptr != t.data() + t.size()) {
        throw ValidationError("bad integer for " + what + ": '" + s + "'");
    }
    return out;
}

double to_double(const std::string& s, const std::string& what) {
    try {
        std::size_t used = 0;
        const std::string t = trim(s);
        const double v = std::stod(t, &used);
        if (used != t.size()) throw std::invalid_argument(s);
        return v;
    } catch (const std::exception&) {
        throw ValidationError("bad number for " + what + ": '" + s + "'");
    }
}

} // namespace

std::string hash_file_hex(const std::string& path) { return hex64(fnv1a64(read_file(path))); }

RunConfig RunConfig::defaults() { return RunConfig{}; }

RunConfig RunConfig::load(const std::string& path) {
    const IniFile ini = IniFile::load(path);
    const fs::path base = fs::path(path).parent_path();
    RunConfig cfg;

    auto resolve = [&base](const std::string& p) {
        if (p.empty()) return p;
        const fs::path fp(p);
        return fp.is_absolute() ? fp.string() : (base / fp).string();
    };

    const auto inputs = ini.kv("inputs");
    auto input = [&](const char* key, std::string& dst) {
        const auto it = inputs.find(key);
        if (it != inputs.end()) dst = resolve(it->second);
    };
    input("bibliographic", cfg.bibliographic);
    input("hyperedges", cfg.hyperedges);
    input("lexicon", cfg.lexicon);
    input("topics", cfg.topics);
    input("journals", cfg.journals);

    const auto period_lines = ini.values("periods");
    if (!period_lines.empty()) {
        cfg.scheme.periods.clear();
        for (const std::string& line : period_lines) {
            std::istringstream ss(line);
            Period p;
            if (!(ss >> p.label >> p.start_year >> p.end_year)) {
                throw ValidationError("bad period line: '" + line + "' (want: LABEL START END)");
            }
            cfg.scheme.periods.push_back(p);
        }
    }

    const auto correction = ini.kv("correction");
    auto factor = [&](const char* key, double& dst) {
        const auto it = correction.find(key);
        if (it != correction.end()) dst = to_double(it->second, key);
    };
    factor("precision_pos", cfg.factors.precision_pos);
    factor("recall_pos", cfg.factors.recall_pos);
    factor("precision_neg", cfg.factors.precision_neg);
    factor("recall_neg", cfg.factors.recall_neg);

    const auto pruning = ini.kv("pruning");
    if (pruning.count("k_out")) cfg.k_out = static_cast<int>(to_long(pruning.at("k_out"), "k_out"));
    if (pruning.count("min_received")) {
        cfg.min_received = to_long(pruning.at("min_received"), "min_received");
    }

    const auto sbm = ini.kv("sbm");
    if (sbm.count("restarts")) cfg.restarts = to_long(sbm.at("restarts"), "restarts");
    if (sbm.count("seed")) {
        cfg.seed = static_cast<std::uint64_t>(to_long(sbm.at("seed"), "seed"));
    }
    if (sbm.count("threshold")) cfg.threshold = to_double(sbm.at("threshold"), "threshold");
    if (sbm.count("variant")) {
        const std::string v = sbm.at("variant");
        if (v == "standard") {
            cfg.variant = DlVariant::Standard;
        } else if (v == "degree-corrected") {
            cfg.variant = DlVariant::DegreeCorrected;
        } else {
            throw ValidationError("unknown sbm variant: '" + v + "'");
        }
    }
    if (sbm.count("binarize")) cfg.binarize = sbm.at("binarize") == "true";

    const auto anchors = ini.kv("anchors");
    if (anchors.count("a")) cfg.anchor_a = anchors.at("a");
    if (anchors.count("b")) cfg.anchor_b = anchors.at("b");

    const auto report = ini.kv("report");
    if (report.count("min_articles")) {
        cfg.min_articles = static_cast<int>(to_long(report.at("min_articles"), "min_articles"));
    }

    const auto output = ini.kv("output");
    if (output.count("dir")) cfg.out_dir = resolve(output.at("dir"));
    if (output.count("workers")) {
        cfg.workers = static_cast<int>(to_long(output.at("workers"), "workers"));
    }
    return cfg;
}

void RunConfig::validate() const {
    for (const auto& [name, path] :
         std::initializer_list<std::pair<const char*, const std::string*>>{
             {"bibliographic", &bibliographic},
             {"hyperedges", &hyperedges},
             {"lexicon", &lexicon},
             {"topics", &topics},
             {"journals", &journals}}) {
        if (path->empty()) throw ValidationError(std::string("missing input path: ") + name);
        if (!fs::exists(*path)) {
            throw ValidationError(std::string(name) + " file does not exist: " + *path);
        }
    }
    try {
        scheme.validate();
        factors.validate();
    } catch (const std::exception& e) {
        throw ValidationError(e.what());
    }
    if (k_out < 1) throw ValidationError("k_out must be >= 1");
    if (min_received < 0) throw ValidationError("min_received must be >= 0");
    if (restarts < 1) throw ValidationError("restarts must be >= 1");
    if (!(threshold >= 0.0 && threshold < 1.0)) throw ValidationError("threshold must be in [0,1)");
    if (min_articles < 1) throw ValidationError("min_articles must be >= 1");
    if (workers < 0) throw ValidationError("workers must be >= 0");
    if (anchor_a.empty() || anchor_b.empty()) throw ValidationError("both anchors are required");
}

const std::vector<std::string>& all_stage_names() {
    static const std::vector<std::string> kStages = {"ingest", "classify", "topics",
                                                     "network", "blocks",   "report"};
    return kStages;
}

ParseCheckResult parse_check(const std::string& hyperedge_path) {
    std::ifstream in(hyperedge_path, std::ios::binary);
    if (!in) throw ValidationError("cannot open hyperedge file: " + hyperedge_path);
    ParseCheckResult result;
    result.records = scan_hyperedge_file(in, result.errors).size();
    return result;
}

Partition read_partition_csv(const std::string& path) {
    const CsvTable table = read_csv_file(path);
    Partition p;
    if (table.header.empty()) return p;
    const std::size_t c_author = table.column("author");
    const std::size_t c_block = table.column("block");
    for (const auto& row : table.rows) {
        const int block = static_cast<int>(to_long(row[c_block], "block"));
        p.assignment[row[c_author]] = block;
        p.num_blocks = std::max(p.num_blocks, block + 1);
    }
    return p;
}

// ---------------------------------------------------------------------------
// Pipeline state and stage helpers

namespace {

struct PipelineContext {
    const RunConfig& cfg;

    AtomLexicon lexicon;
    TopicLexicon topic_lexicon;
    JournalClassifier journals;
    Corpus corpus;
    CitationGraph citations;

    bool claims_ready = false;
    ClaimsIndex claims;
    bool topics_ready = false;
    TopicsIndex topics;
    bool networks_ready = false;
    std::vector<CumulativeNetwork> networks;

    explicit PipelineContext(const RunConfig& config) : cfg(config) {
        lexicon = AtomLexicon::load(cfg.lexicon);
        topic_lexicon = TopicLexicon::load(cfg.topics);
        journals = JournalClassifier::load(cfg.journals);
        corpus = load_corpus(cfg.bibliographic, cfg.hyperedges);
        citations = match_citations(corpus);
    }

    const ClaimsIndex& claims_index() {
        if (!claims_ready) {
            claims = ClaimsIndex::build(corpus, lexicon);
            claims_ready = true;
        }
        return claims;
    }

    const TopicsIndex& topics_index() {
        if (!topics_ready) {
            topics = TopicsIndex::build(corpus, lexicon, topic_lexicon);
            topics_ready = true;
        }
        return topics;
    }

    const std::vector<CumulativeNetwork>& cumulative() {
        if (!networks_ready) {
            networks = cumulative_networks(citations, corpus, cfg.scheme, cfg.k_out,
                                           cfg.min_received);
            networks_ready = true;
        }
        return networks;
    }
};

// Tracks files written by the running stage so failures clean up after
// themselves.
class StageWriter {
public:
    explicit StageWriter(const fs::path& out_dir) : out_dir_(out_dir) {}

    std::ofstream open(const std::string& name) {
        const fs::path path = out_dir_ / name;
        written_.push_back(path);
        std::ofstream out(path, std::ios::binary);
        if (!out) throw std::runtime_error("cannot write " + path.string());
        return out;
    }

    void write(const std::string& name, const std::string& content) {
        std::ofstream out = open(name);
        out << content;
    }

    void remove_written() {
        for (const fs::path& p : written_) {
            std::error_code ec;
            fs::remove(p, ec);
        }
    }

private:
    fs::path out_dir_;
    std::vector<fs::path> written_;
};

class StageCache {
public:
    StageCache(const fs::path& out_dir, std::string stage, std::uint64_t hash)
        : stamp_path_(out_dir / "cache" / (stage + ".stamp")), hash_(hex64(hash)) {}

    bool fresh(const std::vector<std::string>& outputs, const fs::path& out_dir) const {
        std::ifstream in(stamp_path_);
        if (!in) return false;
        std::string stored;
        in >> stored;
        if (stored != hash_) return false;
        for (const std::string& name : outputs) {
            if (!fs::exists(out_dir / name)) return false;
        }
        return true;
    }

    void store() const {
        fs::create_directories(stamp_path_.parent_path());
        std::ofstream out(stamp_path_, std::ios::binary);
        out << hash_ << "\n";
    }

private:
    fs::path stamp_path_;
    std::string hash_;
};

std::uint64_t combine(std::uint64_t a, std::uint64_t b) {
    return fnv1a64(hex64(a) + ":" + hex64(b));
}

std::uint64_t config_hash(const RunConfig& cfg, const std::string& scope) {
    std::ostringstream ss;
    ss << scope << "|" << kVersion;
    if (scope == "network" || scope == "blocks") {
        ss << "|" << cfg.k_out << "|" << cfg.min_received;
        for (const Period& p : cfg.scheme.periods) {
            ss << "|" << p.label << "," << p.start_year << "," << p.end_year;
        }
    }
    if (scope == "blocks") {
        ss << "|" << cfg.restarts << "|" << cfg.seed << "|" << dl_variant_name(cfg.variant)
           << "|" << cfg.threshold << "|" << cfg.binarize;
    }
    return fnv1a64(ss.str());
}

std::uint64_t stage_hash(const RunConfig& cfg, const std::string& stage) {
    std::uint64_t h = fnv1a64(read_file(cfg.bibliographic));
    h = combine(h, fnv1a64(read_file(cfg.hyperedges)));
    if (stage == "classify" || stage == "topics") {
        h = combine(h, fnv1a64(read_file(cfg.lexicon)));
    }
    if (stage == "topics") h = combine(h, fnv1a64(read_file(cfg.topics)));
    return combine(h, config_hash(cfg, stage));
}

std::string flag(bool b) { return b ? "1" : "0"; }

// ---------------------------------------------------------------------------
// Stages

void stage_ingest(PipelineContext& ctx, StageWriter& w) {
    std::ofstream out = w.open("citations.csv");
    write_csv_row(out, {"citing_id", "cited_id"});
    for (const CitationEdge& e : ctx.citations.edges) write_csv_row(out, {e.citing, e.cited});

    std::ostringstream report;
    report << "articles " << ctx.corpus.articles.size() << "\n";
    report << "citation_edges " << ctx.citations.edges.size() << "\n";
    report << "temporal_violations " << ctx.citations.temporal_violations << "\n";
    report << "self_edges " << ctx.citations.self_edges.size() << "\n";
    for (const std::string& id : ctx.citations.self_edges) report << "self_edge " << id << "\n";
    report << "ambiguous_references " << ctx.citations.ambiguous.size() << "\n";
    for (const AmbiguousReference& a : ctx.citations.ambiguous) {
        report << "ambiguous " << a.citing << " '" << a.ref_title << "' " << a.ref_year << " ->";
        for (const std::string& c : a.candidates) report << " " << c;
        report << "\n";
    }
    report << "unknown_hyperedge_ids " << ctx.corpus.unknown_hyperedge_ids.size() << "\n";
    for (const std::string& id : ctx.corpus.unknown_hyperedge_ids) {
        report << "unknown_id " << id << "\n";
    }
    w.write("ingest_report.txt", report.str());
}

void stage_classify(PipelineContext& ctx, StageWriter& w) {
    std::ofstream out = w.open("claims.csv");
    write_csv_row(out, {"article_id", "sentence_index", "label", "trigger", "predicate",
                        "negated"});
    const ClaimsIndex& index = ctx.claims_index();
    for (const Article& a : ctx.corpus.articles) {
        const auto it = index.by_article.find(a.id);
        if (it == index.by_article.end()) continue;
        for (const ClaimRecord& rec : it->second.records) {
            Hyperedge atom{rec.predicate_atom};
            write_csv_row(out, {rec.article_id, std::to_string(rec.sentence_index),
                                claim_label_name(rec.label), ekc_trigger_name(rec.ekc_trigger),
                                serialize(atom), rec.negated ? "true" : "false"});
        }
    }
}

void stage_topics(PipelineContext& ctx, StageWriter& w) {
    std::ofstream out = w.open("topics.csv");
    write_csv_row(out, {"article_id", "topics"});
    const TopicsIndex& index = ctx.topics_index();
    for (const Article& a : ctx.corpus.articles) {
        std::string joined;
        for (TopicCategory t : index.topics_of(a.id)) {
            if (!joined.empty()) joined += "|";
            joined += topic_name(t);
        }
        write_csv_row(out, {a.id, joined});
    }
}

void stage_network(PipelineContext& ctx, StageWriter& w) {
    for (const CumulativeNetwork& net : ctx.cumulative()) {
        std::ofstream edges = w.open("network_" + net.label + "_edges.csv");
        write_csv_row(edges, {"source", "target", "weight"});
        for (const auto& [key, weight] : net.pruned.edges) {
            write_csv_row(edges, {key.first, key.second, std::to_string(weight)});
        }
        std::ofstream nodes = w.open("network_" + net.label + "_nodes.csv");
        write_csv_row(nodes, {"author", "received_total", "retained_flag"});
        for (const auto& [author, received] : net.full.received()) {
            write_csv_row(nodes, {author, std::to_string(received),
                                  flag(net.pruned.nodes.count(author) > 0)});
        }
    }
}

void write_partition_csv(std::ofstream out, const Partition& p) {
    write_csv_row(out, {"author", "block"});
    for (const auto& [author, block] : p.assignment) {
        write_csv_row(out, {author, std::to_string(block)});
    }
}

void stage_blocks(PipelineContext& ctx, StageWriter& w) {
    const auto& nets = ctx.cumulative();
    std::vector<Partition> partitions(nets.size());
    std::ostringstream manifest;
    manifest << "version " << kVersion << "\n";
    manifest << "seed " << ctx.cfg.seed << "\n";
    manifest << "restarts " << ctx.cfg.restarts << "\n";
    manifest << "variant " << dl_variant_name(ctx.cfg.variant) << "\n";
    manifest << "binarize " << flag(ctx.cfg.binarize) << "\n";

    InferParams params;
    params.restarts = ctx.cfg.restarts;
    params.variant = ctx.cfg.variant;
    params.seed = ctx.cfg.seed;
    params.workers = ctx.cfg.workers;

    for (std::size_t i = 0; i < nets.size(); ++i) {
        const CumulativeNetwork& net = nets[i];
        const MultiDigraph graph = MultiDigraph::from_pruned(net.pruned, ctx.cfg.binarize);
        if (graph.num_nodes() > 0) {
            partitions[i] = infer(graph, params);
            manifest << "dl " << net.label << " " << format3(partitions[i].dl) << " blocks "
                     << partitions[i].num_blocks << " nodes " << graph.num_nodes() << "\n";
        } else {
            manifest << "dl " << net.label << " empty\n";
        }
        write_partition_csv(w.open("partition_" + net.label + ".csv"), partitions[i]);
    }

    // Final-period meta-graph.
    const Partition& final_partition = partitions.back();
    std::ofstream meta_out = w.open("metagraph.csv");
    write_csv_row(meta_out, {"block_r", "block_s", "weight", "p", "hidden_flag"});
    if (final_partition.num_blocks > 0) {
        const BlockMetaGraph meta =
            meta_graph(nets.back().pruned, final_partition, ctx.cfg.threshold);
        for (const auto& cell : meta.cells) {
            write_csv_row(meta_out, {std::to_string(cell.r), std::to_string(cell.s),
                                     std::to_string(cell.weight), format3(cell.p),
                                     flag(cell.hidden)});
        }
    }

    // Alignment of earlier partitions onto the final one.
    std::ofstream align_out = w.open("alignment.csv");
    write_csv_row(align_out,
                  {"early_period", "early_block", "final_block", "jaccard", "degenerate"});
    for (std::size_t i = 0; i + 1 < nets.size(); ++i) {
        if (partitions[i].num_blocks == 0 || final_partition.num_blocks == 0) continue;
        const BlockAlignment alignment = align_blocks(partitions[i], final_partition);
        for (std::size_t r = 0; r < alignment.early_to_final.size(); ++r) {
            write_csv_row(align_out, {nets[i].label, std::to_string(r),
                                      std::to_string(alignment.early_to_final[r]),
                                      format3(alignment.jaccard[r]),
                                      flag(alignment.degenerate)});
        }
    }

    // Model selection and pruning-robustness reports on the final network.
    std::ofstream robust_out = w.open("robustness.csv");
    write_csv_row(robust_out, {"block_k3", "best_block_k30", "jaccard", "degenerate"});
    if (final_partition.num_blocks > 0) {
        const MultiDigraph final_graph =
            MultiDigraph::from_pruned(nets.back().pruned, ctx.cfg.binarize);
        const ModelSelection sel = model_select(final_graph, params);
        manifest << "model_select standard " << format3(sel.dl_standard) << " degree-corrected "
                 << format3(sel.dl_degree_corrected) << " selected "
                 << dl_variant_name(sel.selected) << "\n";

        const PrunedAuthorGraph wide = prune(nets.back().full, 30, ctx.cfg.min_received);
        const MultiDigraph wide_graph = MultiDigraph::from_pruned(wide, ctx.cfg.binarize);
        if (wide_graph.num_nodes() > 0) {
            const Partition wide_partition = infer(wide_graph, params);
            const BlockAlignment alignment = align_blocks(final_partition, wide_partition);
            for (std::size_t r = 0; r < alignment.early_to_final.size(); ++r) {
                write_csv_row(robust_out, {std::to_string(r),
                                           std::to_string(alignment.early_to_final[r]),
                                           format3(alignment.jaccard[r]),
                                           flag(alignment.degenerate)});
            }
        }
    }
    w.write("sbm_manifest.txt", manifest.str());
}

void stage_report(PipelineContext& ctx, StageWriter& w) {
    const ClaimsIndex& claims = ctx.claims_index();
    const TopicsIndex& topics = ctx.topics_index();
    const auto& nets = ctx.cumulative();

    // Partitions come from the blocks stage outputs so re-reporting is
    // instant when blocks are cached.
    const fs::path out_dir(ctx.cfg.out_dir);
    const std::string final_label = nets.back().label;
    const fs::path partition_path = out_dir / ("partition_" + final_label + ".csv");
    if (!fs::exists(partition_path)) {
        throw std::runtime_error("missing " + partition_path.string() +
                                 " (run the blocks stage first)");
    }
    Partition final_partition = read_partition_csv(partition_path.string());
    final_partition.variant = ctx.cfg.variant;
    final_partition.seed = ctx.cfg.seed;

    // fig 2 + table 2
    const CorrectionFactors factors =
        ctx.cfg.raw ? CorrectionFactors::identity() : ctx.cfg.factors;
    const auto posneg = posneg_timeseries(ctx.corpus, claims, factors);
    w.write("fig2.svg", svg_posneg_chart(posneg));

    const TopicRatioTable ratios =
        topic_ratio_table(ctx.corpus, claims, topics, ctx.cfg.scheme, ctx.cfg.factors);
    std::ofstream t2 = w.open("table2.csv");
    std::vector<std::string> header = {"period"};
    for (TopicCategory t : kAllTopics) header.push_back(topic_name(t));
    write_csv_row(t2, header);
    for (std::size_t row = 0; row < ratios.row_labels.size(); ++row) {
        std::vector<std::string> fields = {ratios.row_labels[row]};
        for (TopicCategory t : kAllTopics) {
            const auto& cell = ratios.ratios[row].at(t);
            fields.push_back(cell.has_value() ? format3(*cell) : "");
        }
        write_csv_row(t2, fields);
    }

    // fig 3 + topic share CSV
    const TopicShares shares = topic_share_chart(ctx.corpus, topics, ctx.cfg.scheme);
    w.write("fig3.svg", svg_topic_chart(shares));
    std::ofstream ts = w.open("topic_shares.csv");
    header = {"period", "articles"};
    for (TopicCategory t : kAllTopics) header.push_back(topic_name(t));
    header.push_back("coverage_pct");
    write_csv_row(ts, header);
    for (const auto& row : shares.periods) {
        std::vector<std::string> fields = {row.label, std::to_string(row.articles)};
        for (TopicCategory t : kAllTopics) fields.push_back(format3(row.percentage.at(t)));
        fields.push_back("");
        write_csv_row(ts, fields);
    }
    {
        std::vector<std::string> fields = {"all", std::to_string(ctx.corpus.articles.size())};
        for (TopicCategory t : kAllTopics) {
            (void)t;
            fields.push_back("");
        }
        fields.push_back(format3(shares.coverage_percentage));
        write_csv_row(ts, fields);
    }

    // table 3 + table 4 need a non-empty final partition
    std::ofstream t3 = w.open("table3.csv");
    write_csv_row(t3, {"block", "authors", "pos_ratio", "neg_ratio", "endogamy", "mean_year",
                       "mean_articles", "mean_articles_per_year", "mean_unique_coauthors"});
    std::ofstream t4 = w.open("table4.csv");
    header = {"block"};
    for (TopicCategory t : kAllTopics) header.push_back(topic_name(t));
    header.push_back("max_topics");
    write_csv_row(t4, header);
    if (final_partition.num_blocks > 0) {
        const auto metrics =
            block_metrics(ctx.corpus, claims, nets.back().full, final_partition, ctx.cfg.factors);
        for (const BlockMetrics& m : metrics) {
            write_csv_row(t3, {std::to_string(m.block), std::to_string(m.author_count),
                               format3(m.pos_ratio), format3(m.neg_ratio), format3(m.endogamy),
                               format3(m.mean_year), format3(m.mean_articles),
                               format3(m.mean_articles_per_year),
                               format3(m.mean_unique_coauthors)});
        }
        const BlockTopicShares block_shares =
            topic_share_by_block(ctx.corpus, topics, final_partition);
        for (int block = 0; block < final_partition.num_blocks; ++block) {
            std::vector<std::string> fields = {std::to_string(block)};
            std::string max_topics;
            for (TopicCategory t : kAllTopics) {
                fields.push_back(format3(block_shares.share[block].at(t)));
                const auto it = block_shares.max_block.find(t);
                if (it != block_shares.max_block.end() && it->second == block) {
                    if (!max_topics.empty()) max_topics += "|";
                    max_topics += topic_name(t);
                }
            }
            fields.push_back(max_topics);
            write_csv_row(t4, fields);
        }
    }

    // table 5, fig 5, table 6, fig 4
    const auto journals =
        journal_table(ctx.corpus, ctx.citations, ctx.cfg.scheme, ctx.cfg.anchor_a,
                      ctx.cfg.anchor_b, ctx.cfg.min_articles);
    std::ofstream t5 = w.open("table5.csv");
    header = {"journal", "founded", "articles"};
    for (const Period& p : ctx.cfg.scheme.periods) header.push_back(p.label);
    header.push_back("share_citing_a");
    header.push_back("share_citing_b");
    header.push_back("r");
    write_csv_row(t5, header);
    for (const JournalProfile& p : journals) {
        std::vector<std::string> fields = {
            p.journal, p.founded.has_value() ? std::to_string(*p.founded) : "",
            std::to_string(p.article_count)};
        for (int count : p.per_period) fields.push_back(std::to_string(count));
        fields.push_back(format3(p.share_citing_a));
        fields.push_back(format3(p.share_citing_b));
        fields.push_back(p.r.has_value() ? format3(*p.r) : "");
        write_csv_row(t5, fields);
    }

    const auto wor = wor_timeseries(ctx.corpus, ctx.citations, ctx.cfg.anchor_a, ctx.cfg.anchor_b);
    w.write("fig5.svg", svg_wor_chart(wor));

    std::ofstream t6 = w.open("table6.csv");
    write_csv_row(t6, {"block", "share_world_a", "share_world_b"});
    if (final_partition.num_blocks > 0) {
        const auto world_a = world_of_references(ctx.corpus, ctx.citations, ctx.cfg.anchor_a);
        const auto world_b = world_of_references(ctx.corpus, ctx.citations, ctx.cfg.anchor_b);
        const BlockWorldShares bws =
            block_world_shares(ctx.corpus, final_partition, world_a, world_b);
        for (int block = 0; block < final_partition.num_blocks; ++block) {
            write_csv_row(t6, {std::to_string(block), format3(bws.share_world_a[block]),
                               format3(bws.share_world_b[block])});
        }
        const BlockMetaGraph meta =
            meta_graph(nets.back().pruned, final_partition, ctx.cfg.threshold);
        w.write("fig4.svg", svg_meta_graph(meta));
    } else {
        w.write("fig4.svg", svg_meta_graph(BlockMetaGraph{}));
    }

    const EconShares econ =
        econ_share_by_period(ctx.corpus, ctx.cfg.scheme, ctx.journals, ctx.cfg.min_articles);
    std::ofstream ec = w.open("econ_shares.csv");
    write_csv_row(ec, {"label", "start_year", "end_year", "articles", "econ_articles", "share"});
    auto econ_row = [&ec](const EconShares::Row& row) {
        write_csv_row(ec, {row.label, std::to_string(row.start_year),
                           std::to_string(row.end_year), std::to_string(row.articles),
                           std::to_string(row.econ_articles),
                           row.share.has_value() ? format3(*row.share) : ""});
    };
    for (const auto& row : econ.periods) econ_row(row);
    for (const auto& row : econ.first_period_split) econ_row(row);

    // Run manifest: inputs, constants, seed.
    std::ostringstream manifest;
    manifest << "claimnet " << kVersion << "\n";
    manifest << "input bibliographic " << hash_file_hex(ctx.cfg.bibliographic) << "\n";
    manifest << "input hyperedges " << hash_file_hex(ctx.cfg.hyperedges) << "\n";
    manifest << "input lexicon " << hash_file_hex(ctx.cfg.lexicon) << "\n";
    manifest << "input topics " << hash_file_hex(ctx.cfg.topics) << "\n";
    manifest << "input journals " << hash_file_hex(ctx.cfg.journals) << "\n";
    manifest << "seed " << ctx.cfg.seed << "\n";
    manifest << "restarts " << ctx.cfg.restarts << "\n";
    manifest << "variant " << dl_variant_name(ctx.cfg.variant) << "\n";
    manifest << "threshold " << format3(ctx.cfg.threshold) << "\n";
    manifest << "k_out " << ctx.cfg.k_out << "\n";
    manifest << "min_received " << ctx.cfg.min_received << "\n";
    manifest << "min_articles " << ctx.cfg.min_articles << "\n";
    manifest << "correction " << format3(ctx.cfg.factors.precision_pos) << " "
             << format3(ctx.cfg.factors.recall_pos) << " "
             << format3(ctx.cfg.factors.precision_neg) << " "
             << format3(ctx.cfg.factors.recall_neg) << "\n";
    for (const Period& p : ctx.cfg.scheme.periods) {
        manifest << "period " << p.label << " " << p.start_year << " " << p.end_year << "\n";
    }
    w.write("manifest.txt", manifest.str());
}

struct StageSpec {
    std::string name;
    std::vector<std::string> outputs;
    std::function<void(PipelineContext&, StageWriter&)> run;
};

std::vector<StageSpec> stage_specs(const RunConfig& cfg) {
    std::vector<std::string> network_outputs;
    std::vector<std::string> partition_outputs = {"metagraph.csv", "alignment.csv",
                                                  "robustness.csv", "sbm_manifest.txt"};
    for (const Period& p : cfg.scheme.periods) {
        network_outputs.push_back("network_" + p.label + "_edges.csv");
        network_outputs.push_back("network_" + p.label + "_nodes.csv");
        partition_outputs.push_back("partition_" + p.label + ".csv");
    }
    return {
        {"ingest", {"citations.csv", "ingest_report.txt"}, stage_ingest},
        {"classify", {"claims.csv"}, stage_classify},
        {"topics", {"topics.csv"}, stage_topics},
        {"network", network_outputs, stage_network},
        {"blocks", partition_outputs, stage_blocks},
        {"report",
         {"table2.csv", "table3.csv", "table4.csv", "table5.csv", "table6.csv",
          "topic_shares.csv", "econ_shares.csv", "fig2.svg", "fig3.svg", "fig4.svg", "fig5.svg",
          "manifest.txt"},
         stage_report},
    };
}

} // namespace

void run_stages(const RunConfig& config, const std::vector<std::string>& stages) {
    config.validate();
    std::vector<std::string> wanted = stages.empty() ? all_stage_names() : stages;
    for (const std::string& s : wanted) {
        if (std::find(all_stage_names().begin(), all_stage_names().end(), s) ==
            all_stage_names().end()) {
            throw ValidationError("unknown stage: " + s);
        }
    }

    fs::create_directories(config.out_dir);
    PipelineContext ctx(config);

    for (const StageSpec& spec : stage_specs(config)) {
        if (std::find(wanted.begin(), wanted.end(), spec.name) == wanted.end()) continue;
        const StageCache cache(config.out_dir, spec.name, stage_hash(config, spec.name));
        if (cache.fresh(spec.outputs, config.out_dir)) continue;
        StageWriter writer{fs::path(config.out_dir)};
        try {
            spec.run(ctx, writer);
        } catch (const std::exception& e) {
            writer.remove_written();
            throw StageError(spec.name, e.what());
        }
        cache.store();
    }
}

} // namespace claimnet
