#pragma once

#include <cstddef>
#include <functional>

namespace lipspace {

void set_thread_count(int n);
int thread_count();

// Runs body(i) for i in [0, n); each index writes its own slot so reductions stay ordered.
void parallel_for(std::size_t n, const std::function<void(std::size_t)>& body);

}  // namespace lipspace
