#ifndef HCSCK_SUPPORT_HPP
#define HCSCK_SUPPORT_HPP

#include <cstdio>
#include <cstdlib>
#include <cstring>
#include <functional>
#include <string>
#include <thread>
#include <vector>

namespace hcsck {

enum class LogLevel { Error = 0, Info = 1, Debug = 2 };

// Log level comes from the TORIC_HCSCK_LOG environment variable
// (error | info | debug); defaults to error.
inline LogLevel log_level() {
    static LogLevel level = [] {
        const char* env = std::getenv("TORIC_HCSCK_LOG");
        if (env == nullptr) return LogLevel::Error;
        if (std::strcmp(env, "debug") == 0) return LogLevel::Debug;
        if (std::strcmp(env, "info") == 0) return LogLevel::Info;
        return LogLevel::Error;
    }();
    return level;
}

template <typename... Args>
void log(LogLevel level, const char* fmt, Args... args) {
    if (static_cast<int>(level) > static_cast<int>(log_level())) return;
    std::fprintf(stderr, "[hcsck] ");
    std::fprintf(stderr, fmt, args...);
    std::fprintf(stderr, "\n");
}

// Chunked parallel map over [0, n). Each index writes only its own slot, so
// results do not depend on scheduling; callers reduce sequentially afterwards.
inline void parallel_for(std::size_t n, int threads,
                         const std::function<void(std::size_t)>& body) {
    if (threads <= 1 || n < 64) {
        for (std::size_t i = 0; i < n; ++i) body(i);
        return;
    }
    const std::size_t nt = std::min<std::size_t>(threads, n);
    std::vector<std::thread> pool;
    pool.reserve(nt);
    for (std::size_t t = 0; t < nt; ++t) {
        pool.emplace_back([&, t] {
            for (std::size_t i = t; i < n; i += nt) body(i);
        });
    }
    for (auto& th : pool) th.join();
}

} // namespace hcsck

#endif
