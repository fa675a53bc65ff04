#pragma once

#include <chrono>
#include <cstddef>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "rigidity/canonical.hpp"
#include "rigidity/graph.hpp"

namespace rigidity {

enum class CertificateBase { dyad, k4, single_edge };
enum class StepKind { vertex_addition, edge_split, two_sum, vertex_split, pin_split, pin_rearrange };

const char* to_string(CertificateBase base);
const char* to_string(StepKind kind);
CertificateBase parse_certificate_base(const std::string& text);
StepKind parse_step_kind(const std::string& text);

struct Certificate;

// One construction move, with vertex indices in the labelling produced by replaying the
// preceding steps.
//   vertex-addition  vertices {u, w}
//   edge-split       vertices {u, w, x}
//   two-sum          vertices {a1, b1, a2, b2}; operand certifies the glued circuit
//   vertex-split     vertices {v}; labels per incident edge: 0 stay, 1 move, 2 shared
//   pin-split        vertices {v}; labels per incident edge give the pin
//   pin-rearrange    labels per pin edge give the new pin
// `checkpoint` chains the previous checkpoint, the step itself and the labelled graph after it.
struct ConstructionStep {
  StepKind kind = StepKind::edge_split;
  std::vector<std::size_t> vertices;
  std::vector<std::size_t> labels;
  std::vector<Certificate> operand;
  std::string checkpoint;
};

struct Certificate {
  CertificateBase base = CertificateBase::k4;
  std::vector<ConstructionStep> steps;
  CanonicalCode result;
};

using CertifiedGraph = std::variant<Multigraph, PinnedGraph>;

/// The labelled starting graph of a base.
CertifiedGraph base_graph(CertificateBase base);
/// Order-independent fingerprint of a labelled graph (vertex kinds and sorted edges).
std::string labelled_fingerprint(const CertifiedGraph& g);
/// Checkpoint of `step` following a step whose checkpoint is `previous` ("" for the first).
std::string step_checkpoint(const std::string& previous, const ConstructionStep& step,
                            const CertifiedGraph& after);

struct VerifyResult {
  bool ok = false;
  std::string reason;
  std::optional<CertifiedGraph> graph;
};

/// Replays the steps, checking each move's preconditions and checkpoint, then compares
/// the final canonical code with the claimed result. Linear in certificate length.
VerifyResult replay_certificate(const Certificate& c, std::size_t canonical_bound = 16);
bool verify_certificate(const Certificate& c);

struct CertifyOptions {
  std::chrono::milliseconds time_limit{10'000};
  std::size_t canonical_bound = 16;
};

/// Reduction of a rigidity circuit down to K4 by reverse edge-splits and reverse 2-sums.
/// nullopt when the search is exhausted or times out (not a disproof).
std::optional<Certificate> certify_circuit(const Multigraph& circuit, const CertifyOptions& options = {});

/// Certificate for an Assur graph: the dyad, or a circuit certificate followed by a pin split.
std::optional<Certificate> certify(const PinnedGraph& g, const CertifyOptions& options = {});

}  // namespace rigidity
