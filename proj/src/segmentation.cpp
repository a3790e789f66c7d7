#include "scribe/segmentation.hpp"

namespace scribe {

std::vector<Segment> segment_unit(const ProductionUnitDoc& doc, std::size_t size) {
    std::vector<Segment> segments;
    if (size == 0)
        return segments;
    const ClusterSeq seq = doc.view();
    const std::size_t n_full = seq.size() / size;
    segments.reserve(n_full);
    for (std::size_t i = 0; i < n_full; ++i) {
        Segment s;
        s.codex_id = doc.codex_id;
        s.unit_id = doc.unit_id;
        s.scribe = doc.scribe;
        s.index = i;
        s.clusters = seq.slice(i * size, size);
        segments.push_back(std::move(s));
    }
    return segments;
}

std::vector<Segment> segment_corpus(std::span<const ProductionUnitDoc> docs,
                                    std::size_t size) {
    std::vector<Segment> all;
    for (const ProductionUnitDoc& doc : docs) {
        std::vector<Segment> segs = segment_unit(doc, size);
        all.insert(all.end(), std::make_move_iterator(segs.begin()),
                   std::make_move_iterator(segs.end()));
    }
    return all;
}

} // namespace scribe
