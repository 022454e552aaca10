#pragma once

#include <json.hpp>

#include <string>
#include <string_view>

#include "splitspecies/asymptotics.hpp"
#include "splitspecies/bijections.hpp"
#include "splitspecies/counting.hpp"
#include "splitspecies/enumeration.hpp"
#include "splitspecies/series.hpp"
#include "splitspecies/split_structure.hpp"

namespace splitspecies {

using Json = nlohmann::ordered_json;

// Graphs are {"n": order, "edges": [[i, j], ...]} with i < j, edges sorted.
// A "vertices" array is added when the labels are not 0..n-1.
Json to_json(const Graph& g);
Json to_json(const ColoredSplitGraph& c);
Json to_json(const BicoloredGraph& b);
Json to_json(const Structure& s);
Json to_json(VertexSet set);
Json to_json(const SwingReport& r);
Json to_json(const KCanonicalParts& parts);
Json to_json(const AmbiguousParts& parts);
Json to_json(const ColoredKCanonicalParts& parts);

Graph graph_from_json(const Json& j);
ColoredSplitGraph colored_from_json(const Json& j);
BicoloredGraph bicolored_from_json(const Json& j);
VertexSet vertex_set_from_json(const Json& j);
KCanonicalParts k_canonical_parts_from_json(const Json& j);
AmbiguousParts ambiguous_parts_from_json(const Json& j);
ColoredKCanonicalParts colored_k_canonical_parts_from_json(const Json& j);

/// First non-comment line `n`, then one `i j` pair per line. `#` starts a comment.
Graph parse_graph_text(std::string_view text);
/// JSON if the first non-space character is '{', the text format otherwise.
Json parse_structure_document(std::string_view text);

/// "num/den" per coefficient ("num" when the denominator is 1).
Json series_to_json(const RationalSeries& s);
/// Structure counts as decimal strings; throws NonIntegralResult otherwise.
Json counts_to_json(const RationalSeries& s);

Json to_json(const CountTable& table);
CountTable count_table_from_json(const Json& j);

Json to_json(const Census& census);
Census census_from_json(const Json& j);

Json to_json(const CrossCheckReport& report, bool include_timing = true);

Json to_json(const RatioReport& report, int digits = 12);
/// Columns n,b_ratio,s_over_b,u_over_s,bound in scientific notation.
std::string ratio_report_csv(const RatioReport& report, int digits = 12);

Json to_json(const RatioInequalities& checks);

}  // namespace splitspecies
