#pragma once

#include <chrono>
#include <condition_variable>
#include <mutex>

namespace dyadloop {

// Process-wide request pacing shared by agent and judge calls. Enforces a
// minimum spacing of 60/rpm seconds between acquisitions; rpm <= 0 disables
// pacing.
class RateLimiter {
public:
    explicit RateLimiter(int requests_per_minute = 0) : rpm_(requests_per_minute) {}

    void acquire() {
        if (rpm_ <= 0) return;
        const auto interval = std::chrono::microseconds(60'000'000 / rpm_);
        std::unique_lock<std::mutex> lock(mu_);
        auto now = std::chrono::steady_clock::now();
        if (next_allowed_ > now) {
            auto wake = next_allowed_;
            cv_.wait_until(lock, wake);
            now = std::chrono::steady_clock::now();
        }
        next_allowed_ = std::max(next_allowed_, now) + interval;
        cv_.notify_one();
    }

private:
    int rpm_;
    std::mutex mu_;
    std::condition_variable cv_;
    std::chrono::steady_clock::time_point next_allowed_{};
};

} // namespace dyadloop
