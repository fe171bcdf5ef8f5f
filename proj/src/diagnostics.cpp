#include <algorithm>

#include "groupmat/constructions.hpp"
#include "groupmat/group_ring.hpp"
#include "groupmat/matrix_io.hpp"

namespace groupmat {

KleinFragmentReport check_klein_fragment() {
  const auto g = Group::product({2, 2});
  KleinFragmentReport out;
  out.claim = "2e + 2a + 2b + 2ab";
  std::array<int, 3> qst{1, 2, 3};
  do {
    const std::array<Entry, 4> row = {Entry::element(0), Entry::element(qst[0]), Entry::element(qst[1]),
                                      Entry::element(qst[2])};
    KleinFragment frag{{g->token(qst[0]), g->token(qst[1]), g->token(qst[2])},
                       circulant(g, row),
                       {},
                       GroupRingVector(g)};
    const GMatrix& m = frag.matrix;
    for (std::size_t i = 0; i < 4; ++i)
      for (std::size_t j = 0; j < 4; ++j) {
        GroupRingVector product(g);
        for (std::size_t k = 0; k < 4; ++k)
          product += ring_convolve(GroupRingVector::delta(g, m(i, k).index()),
                                   GroupRingVector::delta(g, m(j, k).index()), true);
        if (i != j) frag.off_diagonal_total += product;
        frag.products.push_back({i, j, std::move(product)});
      }
    out.fragments.push_back(std::move(frag));
  } while (std::next_permutation(qst.begin(), qst.end()));
  return out;
}

std::string KleinFragmentReport::to_text() const {
  std::string out = "claim D D^T = " + claim + " (not asserted)\n";
  for (const auto& f : fragments) {
    out += "fragment q=" + f.qst[0] + " s=" + f.qst[1] + " t=" + f.qst[2] + "\n";
    for (const auto& p : f.products)
      out += "  pair " + std::to_string(p.row) + " " + std::to_string(p.other) + " product=" + p.product.to_string() +
             "\n";
    out += "  off-diagonal total=" + f.off_diagonal_total.to_string() + "\n";
  }
  return out;
}

std::vector<ConventionRun> run_gw13_conventions() {
  RawMatrix raw = read_raw_matrix(catalog_fixture_text("gw13-s3"));
  std::vector<ConventionRun> out;
  for (auto presentation : {S3Presentation::a2b3, S3Presentation::a3b2}) {
    raw.header.group = presentation == S3Presentation::a2b3 ? "s3 a2b3" : "s3 a3b2";
    const auto doc = parse_matrix_from(raw);
    const auto claim = parse_claim(doc.semantics);
    for (auto convention : {QuotientConvention::right, QuotientConvention::left}) {
      BalanceOptions options;
      options.convention = convention;
      out.push_back({presentation, convention, verify_claim(doc.matrix, claim, options)});
    }
  }
  return out;
}

}  // namespace groupmat
