#pragma once

#include <vector>

namespace segdet {

// Integer partition, weakly decreasing, trailing zeros stripped.
struct Partition {
    std::vector<int> parts;

    Partition() = default;
    explicit Partition(std::vector<int> p);
    Partition(std::initializer_list<int> p) : Partition(std::vector<int>(p)) {}

    int size() const;  // sum of parts
    int rows() const { return static_cast<int>(parts.size()); }
    int part(int i) const { return i < rows() ? parts[i] : 0; }  // 0-based, padded

    bool operator==(const Partition& o) const { return parts == o.parts; }
};

struct BoxShape {
    int rows;  // k
    int cols;  // n - k
};

bool fits(const Partition& p, const BoxShape& box);

// Remove the partition from the box and rotate by 180 degrees; an involution.
Partition box_complement(const Partition& p, const BoxShape& box);

// Number of semi-standard Young tableaux of the given shape with entries in
// [max_entry]: rows weakly increasing, columns strictly increasing.
long long ssyt_count(const Partition& shape, int max_entry);

// Schubert coefficient of the uniform matroid's torus orbit closure:
//   delta_lambda(U_{k,n}) = sum_{i=0}^{k} (-1)^i C(n,i) #SSYT(lambda^c, k-i)
// with the complement taken in the k x (n-k) box.
long long klyachko_delta(const Partition& lambda, int k, int n);

// Degree of the Chow-Lam form of the uniform torus orbit: the coefficient of
// the hook-shaped partition alpha = (n-r+1, n-r, ..., n-r) with k parts.
long long chow_lam_degree_uniform(int k, int n, int r);

}  // namespace segdet
