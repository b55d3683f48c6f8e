#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "iwip/inp.hpp"
#include "iwip/matrix.hpp"
#include "iwip/realize.hpp"

namespace iwip {

enum class CertificationLevel { FullTheorem62, Conditional, Failed };
std::string to_string(CertificationLevel level);

struct CertificationReport {
  CertificationLevel level = CertificationLevel::Failed;
  bool train_track_ok = false;
  bool fixes_vertices_and_gates = false;
  bool homotopy_inverses_ok = false;
  bool h_positive = false;
  PrimitivityResult primitivity;                        // transition matrix of the graded map
  std::vector<std::pair<std::string, bool>> whitehead;  // vertex name, connected
  std::optional<LegalizingCertificate> legalizing;
  InpSearchResult inp;
  IndexList index_list;
  std::vector<std::string> notes;
};

struct CertifyOptions {
  InpOptions inp;
};

// Structural certificate for h ∘ g: the hypotheses on h (train track,
// positive transition matrix, connected gate-Whitehead graphs), a re-verified
// legalizing certificate for g, homotopy inverses for every factor, vertices
// and gates fixed. The INP search runs on h ∘ g as a cross-check.
CertificationReport certify_realization(const RealizationResult& result, const CertifyOptions& options = {});

struct StableIndexResult {
  IndexList list;
  bool caveat = false;
  std::string reason;
  GateStructure gates;
  int expanding_power = 0;  // 0 when no power up to the bound expands every edge
  std::optional<InpSearchResult> inp;
};

// Least q <= max_power with |f^q(e)| >= 2 for every edge, or 0.
int expanding_power(const MapChain& f, int max_power);

// Gate index list of the intrinsic gates at periodic vertices. The caveat is
// set unless the INP search on an expanding power finds nothing. Throws
// NotTrainTrackError for maps that are not classical train track maps.
StableIndexResult stable_index_list(const MapChain& f, const InpOptions& options = {});

// Conditional grading for a train track map without a structural
// certificate: primitive transition matrix, connected Whitehead graphs for the
// intrinsic gates, and no INP within the search bounds.
CertificationReport grade_train_track_map(const MapChain& f, const InpOptions& options = {});

}  // namespace iwip
