#include "semsim/errors.hpp"

namespace semsim {

const char* errc_name(errc code) {
  switch (code) {
    case errc::cycle_detected: return "CycleDetected";
    case errc::duplicate_id: return "DuplicateId";
    case errc::unknown_endpoint: return "UnknownEndpoint";
    case errc::multiple_roots: return "MultipleRoots";
    case errc::no_root: return "NoRoot";
    case errc::unknown_concept: return "UnknownConcept";
    case errc::syntax_error: return "SyntaxError";
    case errc::missing_parent_code: return "MissingParentCode";
    case errc::duplicate_code: return "DuplicateCode";
    case errc::negative_count: return "NegativeCount";
    case errc::rating_out_of_scale: return "RatingOutOfScale";
    case errc::too_few_pairs: return "TooFewPairs";
    case errc::empty_corpus: return "EmptyCorpus";
    case errc::zero_frequency_concept: return "ZeroFrequencyConcept";
    case errc::degenerate_taxonomy: return "DegenerateTaxonomy";
    case errc::unnormalized_ic: return "UnnormalizedIC";
    case errc::undefined_ratio: return "UndefinedRatio";
    case errc::both_sets_empty: return "BothSetsEmpty";
    case errc::invalid_param: return "InvalidParam";
    case errc::unknown_word: return "UnknownWord";
    case errc::missing_ic_provider: return "MissingICProvider";
    case errc::unknown_measure: return "UnknownMeasure";
    case errc::length_mismatch: return "LengthMismatch";
    case errc::constant_sequence: return "ConstantSequence";
    case errc::no_covered_pairs: return "NoCoveredPairs";
  }
  return "UnknownError";
}

}  // namespace semsim
