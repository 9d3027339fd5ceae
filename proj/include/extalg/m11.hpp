#pragma once

#include "extalg/ext.hpp"

namespace extalg::m11 {

// the basic algebra of the principal 2-block of the Mathieu group M11:
// GF(2), vertices K, M, N, six arrows, eleven relations
std::unique_ptr<Algebra> make_algebra();

// projective bases as printed strings, per vertex label, in listing order
std::vector<std::pair<std::string, std::vector<std::string>>> published_pim_bases();

// published minimal resolutions. K and M are assembled from the tiled double
// complexes, N from its explicit period-4 differentials.
Resolution certificate_resolution(const Algebra& alg, int simple, size_t top);

// the five commuting squares the homotopies are built from, and the
// consecutive pairs satisfying x h_x + h_y y = id
std::vector<HomotopySquare> homotopy_squares(const Algebra& alg);
std::vector<std::pair<Word, Word>> splitting_pairs(const Algebra& alg);

// contracting homotopy of the certificate resolution of K or M, with
// maps[n] for n = 0..levels-1
ContractingHomotopy certificate_homotopy(const Algebra& alg, const Resolution& cert,
                                         size_t levels);

enum GenId {
  gen_alpha,
  gen_beta,
  gen_gamma,
  gen_delta,
  gen_epsilon,
  gen_phi,
  gen_kappa,
  gen_nu
};
extern const char* const gen_names[8];
// (resolved simple, coefficient simple, degree) of each generator
std::tuple<int, int, size_t> gen_signature(GenId g);
// name for a discovered generator class, by signature
std::string name_for_signature(const Algebra& alg, const ExtClass& c);

// the three certificate resolutions bundled for chain-map work
struct CertData {
  CertData(const Algebra& alg, size_t top);
  const Algebra& alg;
  Resolution res_k, res_m, res_n;
  const Resolution& of(int simple) const;
};

// published chain-map lift of a generator, with `levels` components
ChainMap published_lift(const CertData& cd, GenId g, size_t levels);

// published relations of the Ext algebra, as "lhs = rhs" word strings over
// the generator names, and the published list of nonzero s-polynomial
// overlap words in the minimality argument
std::vector<std::pair<std::string, std::string>> published_relations();
std::vector<std::string> published_spoly_exceptions();

// Hilbert series of Ext(S, -): the engine-confirmed forms, the variant form
// printed for M (which disagrees), and the series of Ext(K, K)
RationalSeries series_n();
RationalSeries series_m();
RationalSeries series_m_variant();
RationalSeries series_k();
RationalSeries series_kk();

struct Check {
  std::string name;
  std::string status;  // pass | fail | flag | skipped
  std::string details;
};

struct VerificationReport {
  int bound = 12;
  std::string algebra_name;
  std::vector<Check> checks;
  bool ok() const {
    for (const auto& c : checks)
      if (c.status == "fail") return false;
    return true;
  }
};

// the published composite identities behind the relation proofs, checked
// against the published lifts as exact matrix equations
std::vector<Check> ext_relation_proof_checks(const Algebra& alg, const CertData& cd);

// run every check against a fresh engine computation out to `bound`
VerificationReport verify_m11(int bound = 12);

}  // namespace extalg::m11
