#ifndef SCRIBE_SVG_HPP
#define SCRIBE_SVG_HPP

#include <string>

#include "scribe/analyze.hpp"
#include "scribe/metrics.hpp"

namespace scribe::svg {

/// One dot per segment, colored by scribe label, legend included.
std::string scatter_plot(const analyze::EmbeddingResult& result,
                         const std::string& title);

/// Horizontal boxplots, one per report row, at the report's level.
std::string density_boxplot(const metrics::DensityReport& report,
                            const std::string& title);

/// Stacked inlier/outlier bars, one per report row.
std::string outlier_bars(const analyze::OutlierReport& report,
                         const std::string& title);

/// Paired target-vs-rest boxplots for the top-m features.
std::string importance_boxplot(const analyze::ImportanceReport& report,
                               const std::string& title);

} // namespace scribe::svg

#endif
