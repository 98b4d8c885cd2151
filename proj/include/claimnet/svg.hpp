#pragma once
// Static SVG charts with the underlying numbers embedded as a data comment.

#include <string>
#include <vector>

#include "claimnet/blockmodel.hpp"
#include "claimnet/metrics.hpp"

namespace claimnet {

// Two-series line chart of positive/negative shares per year.
std::string svg_posneg_chart(const std::vector<YearPosNeg>& series);

// Grouped bars: per period, one bar per topic category.
std::string svg_topic_chart(const TopicShares& shares);

// Meta-graph schematic: one circle per block (radius by received weight),
// arrows for visible (non-hidden) block pairs, thickness by p.
std::string svg_meta_graph(const BlockMetaGraph& meta);

// Two-series line chart of world-of-references shares per year.
std::string svg_wor_chart(const std::vector<WorYear>& series);

} // namespace claimnet
