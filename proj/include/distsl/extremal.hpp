#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "distsl/graph.hpp"
#include "distsl/matching.hpp"
#include "distsl/quotient.hpp"

namespace distsl {

// Margin for strict spectral orderings and for direct-vs-quotient agreement.
inline constexpr double kSpectralMargin = 1e-7;
// Published values are rounded to two decimals.
inline constexpr double kTableTolerance = 0.01;

// G_s = K_s v (K_{n-2s-k} + complement(K_{s+k})).
struct FamilyParams {
  int n = 0;
  int s = 1;
  int k = 1;
  int clique_block() const { return n - 2 * s - k; }
  int independent_block() const { return s + k; }
};

// Throws InvalidParameter unless s >= 1, k >= 1 and n - 2s - k >= 0.
void validate(const FamilyParams& p);

// Canonical labeling: K_{n-2s-k} block first, then K_s, then the
// independent block.
Graph build_family(const FamilyParams& p);
// Blocks in the same order; the empty clique block is dropped.
Partition family_partition(const FamilyParams& p);

// K_{(n-1)/2} v complement(K_{(n+1)/2}) for odd n, K_{n/2-1} v
// complement(K_{n/2+1}) for even n; clique labels first. Requires n >= 3.
Graph build_ghat(int n);
Partition ghat_partition(int n);

// Closed-form 3x3 equitable quotient of Q(G_s); needs n - 2s - k >= 1.
QuotientMatrix quotient_Ms(const FamilyParams& p);
// Closed-form 2x2 quotient of Q(K_{(n-k)/2} v complement(K_{(n+k)/2})).
QuotientMatrix quotient_Mhat(int n, int k);
// quotient_Ms, or quotient_Mhat when the clique block is empty.
QuotientMatrix family_quotient(const FamilyParams& p);
QuotientMatrix ghat_quotient(int n);

// Closed-form quotient after confirming it equals the quotient computed
// from Q(graph) under `partition` and that the partition is equitable.
// Throws Error otherwise.
QuotientMatrix checked_quotient(const QuotientMatrix& closed_form, const Graph& graph,
                                const Partition& partition);

// Characteristic polynomials exactly as printed, typos included.
enum class PrintedPoly { t1_fs, t1_ftilde, t1_fhat, t2_eq1, t2_eq2, t2_eq3 };

std::string_view to_string(PrintedPoly which);

struct PolyParams {
  int n = 0;
  int s = 1;
  int k = 1;
};

double printed_poly_eval(PrintedPoly which, const PolyParams& params, double x);
int printed_poly_degree(PrintedPoly which);
// Coefficients (highest first) recovered from printed_poly_eval by exact
// finite differences at x = 0, 1, 2, 3.
std::vector<double> printed_poly_coeffs(PrintedPoly which, const PolyParams& params);
// Family instance whose quotient each printed polynomial claims to describe.
FamilyParams printed_poly_family(PrintedPoly which, const PolyParams& params);
// Characteristic polynomial of that instance's closed-form quotient.
std::vector<double> derived_poly_coeffs(PrintedPoly which, const PolyParams& params);

struct PolyCheck {
  PrintedPoly which;
  PolyParams params;
  std::vector<double> printed;  // coefficients, highest power first
  std::vector<double> derived;
  // Powers of x whose printed and derived coefficients differ by > 0.01.
  std::vector<int> mismatched_powers;
  double derived_root = 0.0;  // largest root of the derived polynomial
  double direct_eta = 0.0;    // eigensolve of the constructed graph
  bool flagged() const { return !mismatched_powers.empty(); }
  bool root_agrees() const;
};

PolyCheck check_printed_poly(PrintedPoly which, const PolyParams& params);

// Every printed polynomial at every applicable instance with
// n_min <= n <= n_max (k = 1 for the factor formulas, 1..k_max for the
// surplus-k ones).
std::vector<PolyCheck> discrepancy_report(int n_min, int n_max, int k_max = 2);

struct PublishedTableRow {
  int n;
  double ghat;
  std::vector<double> family;  // s = 1, 2, ...
};

const std::vector<PublishedTableRow>& published_table1();
std::optional<double> published_value(int n, int s);
std::optional<double> published_ghat(int n);

struct TableEntry {
  int s = 0;  // 0 for the G-hat entry
  double eta_direct = 0.0;
  double eta_quotient = 0.0;
  std::optional<double> published;
};

struct TableRow {
  int n = 0;
  std::vector<TableEntry> family;  // s = 1..floor((n-1)/2), k = 1
  TableEntry ghat;
};

// Recomputes every table entry twice: eigensolve of the built graph and
// largest root of its checked closed-form quotient. Requires
// 4 <= n_min <= n_max <= 36.
std::vector<TableRow> reproduce_table1(int n_min, int n_max);

enum class Verdict { pass, fail, skipped };
std::string_view to_string(Verdict v);

struct VerdictEntry {
  std::string name;
  Verdict verdict = Verdict::skipped;
  std::string note;
};

struct SpectralValue {
  std::string label;  // "G1", "G2", ..., "Ghat"
  int s = 0;
  double eta_direct = 0.0;
  double eta_quotient = 0.0;
};

struct TheoremReport {
  int n = 0;
  int k = 0;
  bool hypothesis_met = false;
  std::vector<SpectralValue> values;
  std::vector<VerdictEntry> verdicts;
  std::vector<PolyCheck> formula_checks;
  std::optional<Rational> extremal_mu_f;
  std::optional<DeficiencyWitness> extremal_witness;
  // Every G_s with s >= 2 lies strictly above G_1, regardless of hypothesis.
  bool ordering_holds = false;

  bool passed() const;
  const VerdictEntry* verdict(std::string_view name) const;
};

enum class Minimizer { g1, ghat, other };
std::string_view to_string(Minimizer m);

// The family member the factor theorem singles out at order n.
Minimizer expected_theorem2_minimizer(int n);
// Minimizer over {G_s} and G-hat among a verify_theorem2 report's values.
Minimizer observed_minimizer(const TheoremReport& report);

// Checks at order n (3 <= n <= 40): minimizer shape, the extremal graph's
// missing factor with witness {join vertex}, the n >= 37 ordering, and
// direct-vs-quotient agreement.
TheoremReport verify_theorem2(int n);

// Checks for surplus k: mu_f of the extremal graph, the ordering of G_s
// above G_1 (when n >= 14k + 24), and direct-vs-quotient agreement.
TheoremReport verify_theorem1(int n, int k);

}  // namespace distsl
