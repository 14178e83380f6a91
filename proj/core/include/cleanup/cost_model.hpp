#pragma once

#include "cleanup/model.hpp"

namespace cleanup {

// Average comparison counts for searches on j objects. Exact when j + 1 is a
// power of two, smooth interpolants otherwise. All reject j = 0.

/// Successful binary search: (1 + 1/j) log2(j + 1) - 1.
double binary_success_cost(long j);

/// Failed binary search: log2(j + 1).
double binary_fail_cost(long j);

/// Successful sequential search: (j + 1) / 2.
double sequential_cost(long j);

/// Cost of finding an object that is still on the list when the pile holds
/// `pile_size` of the `n` objects (0 <= pile_size < n).
double list_search_cost(Model model, long n, long pile_size);

/// Cost of finding an object that is in a pile of `pile_size` objects
/// (1 <= pile_size <= n). Memoryless models pay for the failed list search
/// first.
double pile_search_cost(Model model, long n, long pile_size);

/// Average cost of returning a pile of `m` objects to the list (1 <= m <= n).
double cleanup_cost(Model model, long n, long m);

/// Average total cost of taking one object off the list and later putting it
/// back, over a cycle that ends with `m` objects in the pile.
double star_cost(Model model, long n, long m);

}  // namespace cleanup
