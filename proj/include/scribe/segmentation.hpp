#ifndef SCRIBE_SEGMENTATION_HPP
#define SCRIBE_SEGMENTATION_HPP

#include <span>
#include <string>
#include <vector>

#include "scribe/corpus.hpp"

namespace scribe {

inline constexpr std::size_t kDefaultSegmentSize = 5000;

/// A consecutive, non-overlapping window of exactly `size` grapheme
/// clusters (whitespace included) within one production unit. Borrows the
/// document's cluster storage; the corpus must outlive its segments.
struct Segment {
    std::string codex_id;
    std::string unit_id;
    std::string scribe;
    std::size_t index = 0; // 0-based within the unit
    ClusterSeq clusters;
};

/// Cuts a unit into floor(n / size) full segments; the remainder is
/// discarded. A unit shorter than `size` yields no segments.
std::vector<Segment> segment_unit(const ProductionUnitDoc& doc,
                                  std::size_t size = kDefaultSegmentSize);

std::vector<Segment> segment_corpus(std::span<const ProductionUnitDoc> docs,
                                    std::size_t size = kDefaultSegmentSize);

} // namespace scribe

#endif
