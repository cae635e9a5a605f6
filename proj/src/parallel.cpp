#include "evscan/parallel.hpp"

#include <atomic>
#include <exception>
#include <mutex>
#include <thread>
#include <vector>

namespace evscan {

void parallel_for_index(long count, int threads, const std::function<void(long)>& fn) {
    if (count <= 0) return;
    int workers = threads > 0 ? threads : static_cast<int>(std::thread::hardware_concurrency());
    if (workers < 1) workers = 1;
    workers = static_cast<int>(std::min<long>(workers, count));

    if (workers == 1) {
        for (long k = 0; k < count; ++k) fn(k);
        return;
    }

    std::atomic<long> next{0};
    std::mutex error_mutex;
    long error_index = -1;
    std::exception_ptr error;

    auto worker = [&]() {
        for (;;) {
            const long k = next.fetch_add(1, std::memory_order_relaxed);
            if (k >= count) return;
            try {
                fn(k);
            } catch (...) {
                std::lock_guard<std::mutex> lock(error_mutex);
                if (error_index < 0 || k < error_index) {
                    error_index = k;
                    error = std::current_exception();
                }
            }
        }
    };

    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (int t = 0; t < workers; ++t) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
    if (error) std::rethrow_exception(error);
}

}  // namespace evscan
