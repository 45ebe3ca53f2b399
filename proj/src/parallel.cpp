#include <entropygraph/parallel.hpp>

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <exception>
#include <mutex>
#include <string>
#include <thread>
#include <vector>

namespace entropygraph {

int thread_count() {
    const int machine = static_cast<int>(std::max(1u, std::thread::hardware_concurrency()));
    const char* env = std::getenv("ENTROPYGRAPH_THREADS");
    if (env == nullptr || *env == '\0')
        return machine;
    int requested = machine;
    try {
        requested = std::stoi(env);
    } catch (const std::exception&) {
        return machine;
    }
    return std::clamp(requested, 1, machine * 4);
}

void parallel_for_chunks(std::int64_t chunks, const std::function<void(std::int64_t)>& body) {
    const int workers = static_cast<int>(std::min<std::int64_t>(thread_count(), chunks));
    if (workers <= 1) {
        for (std::int64_t c = 0; c < chunks; ++c)
            body(c);
        return;
    }
    std::atomic<std::int64_t> next{0};
    std::exception_ptr failure;
    std::mutex failure_mutex;
    std::vector<std::thread> pool;
    pool.reserve(static_cast<std::size_t>(workers));
    for (int w = 0; w < workers; ++w)
        pool.emplace_back([&] {
            while (true) {
                const std::int64_t c = next.fetch_add(1);
                if (c >= chunks)
                    return;
                try {
                    body(c);
                } catch (...) {
                    std::lock_guard lock(failure_mutex);
                    if (!failure)
                        failure = std::current_exception();
                    next = chunks;
                }
            }
        });
    for (auto& t : pool)
        t.join();
    if (failure)
        std::rethrow_exception(failure);
}

} // namespace entropygraph
