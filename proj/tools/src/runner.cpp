#include "bdom/cli/runner.hpp"

#include <algorithm>
#include <atomic>
#include <exception>
#include <mutex>
#include <thread>

namespace bdom::cli {

std::size_t resolve_workers(std::size_t requested) noexcept {
    if (requested > 0) return requested;
    return std::max<std::size_t>(1, std::thread::hardware_concurrency());
}

std::vector<RunLog> run_batch(const std::vector<RunConfig>& configs, std::size_t workers,
                              const std::function<void(std::size_t, std::size_t)>& progress) {
    std::vector<RunLog> results(configs.size());
    std::atomic<std::size_t> next{0};
    std::atomic<bool> failed{false};
    std::size_t done = 0;
    std::exception_ptr error;
    std::mutex mutex;

    auto work = [&] {
        for (std::size_t i = next++; i < configs.size() && !failed; i = next++) {
            try {
                results[i] = run(configs[i]);
            } catch (...) {
                std::lock_guard lock(mutex);
                if (!error) error = std::current_exception();
                failed = true;
                return;
            }
            std::lock_guard lock(mutex);
            ++done;
            if (progress) progress(done, configs.size());
        }
    };

    const std::size_t n = std::min(resolve_workers(workers), std::max<std::size_t>(1, configs.size()));
    if (n == 1) {
        work();
    } else {
        std::vector<std::jthread> pool;
        for (std::size_t t = 0; t < n; ++t) pool.emplace_back(work);
    }
    if (error) std::rethrow_exception(error);
    return results;
}

}  // namespace bdom::cli
