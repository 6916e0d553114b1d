#include "f4ms/report.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <mutex>
#include <thread>

#include "f4ms/rng.hpp"

namespace f4ms {

SuiteReport run_checks(const std::string& suite_name, const std::vector<NamedCheck>& checks,
                       std::uint64_t trials, std::uint64_t master_seed, int jobs) {
    SuiteReport rep;
    rep.suite = suite_name;
    rep.trials = trials;
    rep.seed = suite_seed(master_seed, suite_name);
    auto start = std::chrono::steady_clock::now();

    struct Task {
        const NamedCheck* check;
        std::uint64_t trial;
        std::uint64_t seed;
    };
    std::vector<Task> tasks;
    for (const NamedCheck& c : checks) {
        std::uint64_t check_seed = mix_seed(rep.seed, hash_name(c.name));
        std::uint64_t n = trials * static_cast<std::uint64_t>(c.trials_scale);
        for (std::uint64_t t = 0; t < n; ++t) tasks.push_back({&c, t, trial_seed(check_seed, t)});
    }

    std::mutex mu;
    std::atomic<std::size_t> next{0};
    std::atomic<std::uint64_t> passes{0};
    std::vector<Failure> failures;

    auto worker = [&] {
        for (;;) {
            std::size_t i = next.fetch_add(1);
            if (i >= tasks.size()) return;
            const Task& task = tasks[i];
            Rng rng(task.seed);
            std::optional<std::string> cex;
            try {
                cex = task.check->run(rng);
            } catch (const std::exception& e) {
                cex = std::string("exception: ") + e.what();
            }
            if (!cex) {
                passes.fetch_add(1);
            } else {
                std::lock_guard<std::mutex> lock(mu);
                failures.push_back({task.check->name, task.trial, *cex});
            }
        }
    };

    if (jobs <= 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        for (int j = 0; j < jobs; ++j) pool.emplace_back(worker);
        for (auto& th : pool) th.join();
    }

    // deterministic order regardless of scheduling
    std::sort(failures.begin(), failures.end(), [](const Failure& a, const Failure& b) {
        if (a.check != b.check) return a.check < b.check;
        return a.trial < b.trial;
    });
    rep.passes = passes.load();
    rep.failures = std::move(failures);
    rep.wall_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
    return rep;
}

} // namespace f4ms
