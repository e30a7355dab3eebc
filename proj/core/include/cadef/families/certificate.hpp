#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "cadef/families/family.hpp"
#include "cadef/families/presentation.hpp"
#include "cadef/wedderburn/wedderburn.hpp"

namespace cadef {

/// One claimed block of a fiber: the corner e A for a central idempotent e is
/// either semisimple of a given geometric type, or isomorphic to a named
/// presentation via explicit generator images.
struct BlockClaim {
  enum class Kind { Semisimple, Named };
  Kind kind = Kind::Semisimple;
  Element idempotent;  // empty means the unit
  std::string selector = "1";
  GeometricType type;
  std::optional<Presentation> presentation;
  std::vector<Element> images;  // fiber coordinates, one per generator
  std::string map;

  static BlockClaim semisimple(GeometricType type, Element idempotent = {}, std::string selector = "1");
  static BlockClaim named(Presentation p, std::vector<Element> images, std::string map, Element idempotent = {},
                          std::string selector = "1");
};

struct FiberClaim {
  std::vector<BlockClaim> blocks;
};

/// A factor of a deformation source or target.
struct Factor {
  bool named = false;
  std::string name;    // presentation name when named
  GeometricType type;  // when semisimple
  std::string label() const { return named ? name : type.to_string(); }
  friend bool operator==(const Factor& a, const Factor& b) { return a.label() == b.label(); }
};
bool same_factors(std::vector<Factor> a, std::vector<Factor> b);
GeometricType total_type(const std::vector<Factor>& factors);
std::string describe(const std::vector<Factor>& factors);

struct BlockCheck {
  std::string selector;
  Factor factor;
  std::size_t dim = 0;
  std::size_t radical_dim = 0;
  std::optional<GeometricType> type;
  std::optional<MapCheck> map;
  std::string map_text;
  bool ok = false;
  std::string failure;
};

/// Diagnostic map checks that do not decide validity.
struct AuxCheck {
  std::string description;
  std::string presentation;
  MapCheck map;
};

struct FiberCheck {
  Rational at;
  std::size_t dim = 0;
  std::size_t centre_dim = 0;
  std::size_t radical_dim = 0;
  std::vector<std::size_t> block_dims;
  std::vector<BlockCheck> blocks;
  std::vector<AuxCheck> aux;
  bool ok = false;
  std::string failure;
};

/// Verifies a claim against a fiber: idempotents central, orthogonal,
/// summing to 1; every block matches its claim.
FiberCheck check_fiber(const FDAlgebra& fiber, const Rational& at, const FiberClaim& claim);

using ClaimBuilder = std::function<FiberClaim(const FDAlgebra& fiber, const Rational& at)>;
using AuxBuilder = std::function<std::vector<AuxCheck>(const FDAlgebra& fiber, const Rational& at)>;

/// Everything needed to (re)verify one deformation edge. The claim builder is
/// called at the special point (normally t = 0) for the source
/// identification and at each sample point.
struct EdgeSpec {
  std::vector<Factor> sources;
  FDAlgebra source;
  PolyFamily family;
  ClaimBuilder claims;
  AuxBuilder aux;
  std::vector<Rational> samples;  // defaults to the family's samples
  Rational special_at;
};

struct CertEdge {
  EdgeSpec spec;
  FiberCheck special;
  std::vector<FiberCheck> samples;
  std::vector<FiberClaim> sample_claims;
  std::vector<Factor> target;
  bool verified = false;
  std::string failure;
};

/// Runs every check without throwing; failures are recorded in the edge.
CertEdge evaluate_edge(EdgeSpec spec);
/// As evaluate_edge but throws EvidenceFailed naming the failing item.
CertEdge certify_edge(EdgeSpec spec);

struct Certificate {
  std::vector<CertEdge> chain;
  std::vector<Factor> source() const;
  std::vector<Factor> target() const;
  bool complete() const;  // every target factor is semisimple
  bool verified() const;
  GeometricType target_type() const;
};

/// Checks that each edge's sources equal the previous edge's target factors.
/// Throws ChainMismatch.
Certificate compose_certificates(std::vector<CertEdge> edges);
/// As above; semisimple factors of first's target that `then` leaves alone
/// are carried along by a constant edge.
Certificate compose_certificates(const Certificate& first, const Certificate& then);

/// Product of copies of k and M_2(k) with the given type (sizes 1 and 2).
FDAlgebra semisimple_model(const GeometricType& type);
/// Constant edge from a semisimple factor to itself.
EdgeSpec identity_edge(const GeometricType& type);

/// Blockwise product: edges are zipped and their families multiplied; the
/// shorter chain is padded with constant edges over its final fiber.
Certificate product_certificate(const Certificate& a, const Certificate& b);
CertEdge product_edge(const CertEdge& a, const CertEdge& b);

}  // namespace cadef
