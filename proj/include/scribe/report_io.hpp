#ifndef SCRIBE_REPORT_IO_HPP
#define SCRIBE_REPORT_IO_HPP

#include <span>
#include <string>
#include <string_view>

#include "json.hpp"
#include "scribe/analyze.hpp"
#include "scribe/features.hpp"
#include "scribe/metrics.hpp"

namespace scribe::io {

/// RFC-4180 style quoting: fields with commas, quotes or newlines get
/// wrapped, inner quotes doubled.
std::string csv_escape(std::string_view field);

/// Deterministic float formatting for CSV cells (%.12g).
std::string fmt_double(double v);

std::string to_csv(std::span<const metrics::ScribeStats> stats);
nlohmann::json to_json(std::span<const metrics::ScribeStats> stats);

std::string to_csv(const metrics::DensityReport& report);
nlohmann::json to_json(const metrics::DensityReport& report);

std::string to_csv(const analyze::EmbeddingResult& result);
nlohmann::json to_json(const analyze::EmbeddingResult& result);

std::string to_csv(const analyze::OutlierReport& report);
nlohmann::json to_json(const analyze::OutlierReport& report);

std::string to_csv(const analyze::ImportanceReport& report);
nlohmann::json to_json(const analyze::ImportanceReport& report);

std::string to_csv(const analyze::AttributionReport& report);
nlohmann::json to_json(const analyze::AttributionReport& report);

/// Header row of bigram columns, then one row per segment id.
std::string to_csv(const FeatureMatrix& matrix);
nlohmann::json vocab_to_json(std::span<const VocabEntry> vocab);

std::string segment_table_csv(std::span<const Segment> segments);

} // namespace scribe::io

#endif
