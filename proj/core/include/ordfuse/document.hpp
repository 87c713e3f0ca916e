#pragma once

// JSON evidence documents.
//
//   {
//     "schema_version": 1,
//     "description": "optional free text",
//     "frame": ["a", "b", "c"],
//     "evidences": [
//       [ {"proposition": ["a"], "mass": 0.47},
//         {"proposition": ["a", "b"], "mass": 0.08}, ... ],
//       ...
//     ],
//     "config": { "k-mode": "pairwise-mean", "dims": 4, ... }   // optional
//   }
//
// Entry order inside an evidence is the proposition order (first = 1).

#include <string>
#include <string_view>

#include "ordfuse/config.hpp"
#include "ordfuse/error.hpp"
#include "ordfuse/types.hpp"

namespace ordfuse {

inline constexpr int kSchemaVersion = 1;

/// Masses of one evidence may miss a unit total by this much at ingestion;
/// within it they are rescaled to sum to 1.
inline constexpr double kIngestionTolerance = 1e-6;

/// Input error carrying a location: "line:column" for syntax errors, a
/// JSON pointer such as "/evidences/2/1/mass" for field errors.
class ParseError : public InputError {
 public:
  ParseError(std::string location, const std::string& what)
      : InputError(location + ": " + what), location_(std::move(location)) {}

  const std::string& location() const noexcept { return location_; }

 private:
  std::string location_;
};

struct EvidenceDocument {
  EvidenceSet evidences;
  Configuration config;
};

/// Throws ParseError on malformed documents and InputError when the
/// evidences do not form a valid EvidenceSet.
EvidenceDocument parse_evidence_document(std::string_view text);

/// Serializes an evidence set and full configuration; parses back to an
/// equal document.
std::string serialize_evidence_document(const EvidenceSet& es, const Configuration& cfg);

}  // namespace ordfuse
