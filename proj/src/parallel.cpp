#include "voaforge/parallel.hpp"

#include <atomic>

namespace voaforge {

namespace {
std::atomic<int> g_workers{1};
}

void set_worker_count(int k) { g_workers.store(k < 1 ? 1 : k); }
int worker_count() { return g_workers.load(); }

}  // namespace voaforge
