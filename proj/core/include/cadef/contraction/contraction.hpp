#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "cadef/families/certificate.hpp"
#include "cadef/families/presentation.hpp"
#include "cadef/wedderburn/wedderburn.hpp"

namespace cadef {

/// Contraction algebra of type A_n or D_{n,m}; m absent means infinity.
struct ContractionSpec {
  enum class Type { A, D };
  Type type = Type::D;
  int n = 2;
  std::optional<int> m;

  static ContractionSpec a(int n) { return {Type::A, n, std::nullopt}; }
  static ContractionSpec d(int n, std::optional<int> m) { return {Type::D, n, m}; }
  std::string name() const;
};

/// Throws OutOfRange unless n >= 1 (type D) or n >= 2 (type A) and m >= 1.
Presentation contraction_presentation(const ContractionSpec& s);

struct BuiltContraction {
  Presentation presentation;
  ncgb::RewritingSystem system;
  FDAlgebra algebra;  // labels are the normal words
  bool confluent = false;
};
BuiltContraction build_contraction(const ContractionSpec& s);

struct InvariantRecord {
  std::size_t dim = 0;
  std::size_t centre_dim = 0;
  std::vector<std::string> gb_added;  // leading words added by completion
  std::string witness = "x";
  std::size_t nilpotency_index = 0;
  friend bool operator==(const InvariantRecord&, const InvariantRecord&) = default;
};

/// The tabulated row; nullopt outside n, m >= 2 for type D. Type A rows are
/// the presentation-faithful values (dim n-1).
std::optional<InvariantRecord> expected_invariants(const ContractionSpec& s);
InvariantRecord computed_invariants(const BuiltContraction& b);

/// {2: n-1, 1: 2m} for m <= n, {2: n-1, 1: 2n+1} otherwise; {1: n-1} for A_n.
GeometricType semisimple_target(const ContractionSpec& s);

/// All (k, l) >= 0 with 4k + l = d, k + l <= z and 2k + l >= p.
std::vector<std::pair<std::size_t, std::size_t>> obstruction_solver(std::size_t d, std::size_t z, std::size_t p);

enum class BlockBound { BoundTwo, NoBound };
std::string_view to_string(BlockBound b);
/// BoundTwo when {a^i} and {a^i b} span A.
BlockBound matrix_block_bound(const FDAlgebra& A, const Element& a, const Element& b);

/// D_{n,m} and D_{n,inf} give the same normal basis and structure constants.
bool dinfty_coincidence(int n, int m);

/// Deformation certificate for the sign-twisted D^s_{n,m}, following the
/// induction down to D_{n-k,1} or D_{1,m-k}.
Certificate d_certificate(int n, std::optional<int> m, int sign = 1);
Certificate a_certificate(int n);

/// Notes on places where the presentations and the tabulated values differ.
std::vector<std::string> discrepancy_notes(const ContractionSpec& s);

struct Reproduction {
  ContractionSpec spec;
  std::optional<BuiltContraction> built;
  std::optional<InvariantRecord> computed;
  std::optional<InvariantRecord> expected;
  bool invariants_match = false;
  std::vector<std::pair<std::size_t, std::size_t>> solutions;
  bool unique = false;
  GeometricType expected_target;
  std::optional<GeometricType> obstruction_target;
  std::optional<Certificate> certificate;
  std::optional<GeometricType> certified_target;
  bool match = false;
  std::vector<std::string> notes;
  std::string failed_stage;
  std::string failure;
  bool ok() const { return failed_stage.empty(); }
};

/// Construction, invariants, obstruction arithmetic and a composed
/// certificate, compared against each other. Never throws for valid specs;
/// stage failures are recorded.
Reproduction reproduce(const ContractionSpec& s);

}  // namespace cadef
