#ifndef SCRIBE_ERRORS_HPP
#define SCRIBE_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace scribe {

// Error hierarchy maps onto CLI exit codes: config 2, data 3, analysis 4.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct ConfigError : Error {
    using Error::Error;
};
struct DataError : Error {
    using Error::Error;
};
struct AnalysisError : Error {
    using Error::Error;
};

#define SCRIBE_DEFINE_ERROR(Name, Base)                                      \
    struct Name : Base {                                                     \
        explicit Name(const std::string& what) : Base(#Name ": " + what) {}  \
    }

SCRIBE_DEFINE_ERROR(MalformedManifest, DataError);
SCRIBE_DEFINE_ERROR(DuplicateUnit, DataError);
SCRIBE_DEFINE_ERROR(MissingFile, DataError);
SCRIBE_DEFINE_ERROR(EncodingError, DataError);
SCRIBE_DEFINE_ERROR(MalformedInventory, DataError);
SCRIBE_DEFINE_ERROR(EmptyDocument, DataError);
SCRIBE_DEFINE_ERROR(EmptyGroup, DataError);
SCRIBE_DEFINE_ERROR(EmptyLexicon, DataError);

SCRIBE_DEFINE_ERROR(BadHyperparameter, ConfigError);

SCRIBE_DEFINE_ERROR(DegenerateInput, AnalysisError);
SCRIBE_DEFINE_ERROR(NonFiniteInput, AnalysisError);
SCRIBE_DEFINE_ERROR(DimensionMismatch, AnalysisError);
SCRIBE_DEFINE_ERROR(SingleClassInput, AnalysisError);
SCRIBE_DEFINE_ERROR(EmptyTrainingSet, AnalysisError);
SCRIBE_DEFINE_ERROR(InsufficientScribes, AnalysisError);
SCRIBE_DEFINE_ERROR(DuplicateLabel, AnalysisError);
SCRIBE_DEFINE_ERROR(NotEnoughSegments, AnalysisError);
SCRIBE_DEFINE_ERROR(SingleUnit, AnalysisError);
SCRIBE_DEFINE_ERROR(EmptyClass, AnalysisError);
SCRIBE_DEFINE_ERROR(EmptyQuery, AnalysisError);
SCRIBE_DEFINE_ERROR(EmptyReference, AnalysisError);

#undef SCRIBE_DEFINE_ERROR

} // namespace scribe

#endif
