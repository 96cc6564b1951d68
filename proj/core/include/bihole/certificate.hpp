#ifndef BIHOLE_CERTIFICATE_HPP
#define BIHOLE_CERTIFICATE_HPP

#include <string>
#include <vector>

#include "bihole/bipartite_graph.hpp"

namespace bihole {

/// A claimed bi-hole: X in A, Y in B, |X| = |Y|, no edges between them.
/// Index sets are kept sorted. Always re-verifiable via verify_bihole.
struct BiHoleCertificate {
    std::vector<int> x_set;
    std::vector<int> y_set;

    int size() const { return static_cast<int>(x_set.size()); }
    bool operator==(const BiHoleCertificate&) const = default;
};

/// True iff the certificate is balanced, duplicate-free, and spans no edge
/// of g. Out-of-range indices are rejected with std::out_of_range.
bool verify_bihole(const BipartiteGraph& g, const BiHoleCertificate& c);

/// JSON wire format: {"x":[...],"y":[...]} with 0-based sorted indices.
std::string certificate_to_json(const BiHoleCertificate& c);
BiHoleCertificate certificate_from_json(const std::string& text);

/// Translate a certificate found in an induced subgraph back to host-graph
/// indices: entry i of the maps is the host index of subgraph vertex i.
BiHoleCertificate map_certificate(const BiHoleCertificate& c,
                                  const std::vector<int>& a_map,
                                  const std::vector<int>& b_map);

}  // namespace bihole

#endif
