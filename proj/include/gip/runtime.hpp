#pragma once

#include <atomic>
#include <cstdint>
#include <functional>
#include <map>
#include <string>
#include <thread>
#include <vector>

#include "gip/image.hpp"

namespace gip {

/// Stand-in for CPU vs. device execution. Both backends expose the identical
/// op set and must produce bit-identical outputs.
enum class BackendKind { reference, parallel };

BackendKind backendFromString(const std::string& s);
std::string to_string(BackendKind backend);

struct ExecPolicy {
    BackendKind backend = BackendKind::reference;
    int threads = 0; // 0 = hardware concurrency (parallel backend only)

    int effectiveThreads() const {
        if (backend == BackendKind::reference) return 1;
        if (threads > 0) return threads;
        unsigned hw = std::thread::hardware_concurrency();
        return hw > 0 ? static_cast<int>(hw) : 1;
    }
};

/// Splits [0, n) into contiguous chunks, one per worker. body(begin, end) must
/// compute each element independently of chunk boundaries; with that, outputs
/// are bit-identical for any thread count.
void parallelFor(const ExecPolicy& policy, std::int64_t n,
                 const std::function<void(std::int64_t, std::int64_t)>& body);

/// Monotone fractional milliseconds. Differences measure elapsed wall time.
double now();

struct TraceNode {
    std::string opName;
    double durationMs = 0.0;
    std::vector<TraceNode> children;
};

/// Hierarchical per-op timing. Between start() and stop() every op scope
/// records a node; nested scopes become children in entry order.
class Tracer {
public:
    void start();
    void stop();
    bool active() const { return active_; }

    void enter(const std::string& opName);
    void exit();

    const std::vector<TraceNode>& roots() const { return roots_; }

    /// Fig-style rendering: "> name" on entry, "< name  <ms> ms" on exit with
    /// four decimals, two spaces of indentation per nesting level.
    std::string render() const;

private:
    struct Pending {
        TraceNode node;
        double enteredAt;
    };

    bool active_ = false;
    std::vector<TraceNode> roots_;
    std::vector<Pending> stack_;
};

/// RAII scope recording one TraceNode when the tracer is active.
class TraceScope {
public:
    TraceScope(Tracer& tracer, const std::string& opName);
    ~TraceScope();

    TraceScope(const TraceScope&) = delete;
    TraceScope& operator=(const TraceScope&) = delete;

private:
    Tracer& tracer_;
    bool recorded_;
};

struct MemoryRow {
    std::string name;
    int width;
    int height;
    int depth;
    std::int64_t bytes;
};

/// Named image store emulating device memory. push and pull copy the full
/// pixel array so transfer cost stays measurable.
class BufferStore {
public:
    void push(const std::string& name, const Image& img);
    Image pull(const std::string& name) const;
    void clear();
    bool contains(const std::string& name) const;
    void erase(const std::string& name);
    std::size_t count() const { return entries_.size(); }

    /// One row per buffer, ordered lexicographically by name;
    /// bytes = 4 * width * height * depth.
    std::vector<MemoryRow> reportMemory() const;

private:
    std::map<std::string, Image> entries_;
};

void pushCurrentSlice(BufferStore& store, const std::string& name,
                      const TimeLapse& tl, int frame, int channel);

/// One execution context: a buffer store, the backend policy, and the tracer.
/// Confined to one caller at a time; ops may parallelize internally.
class Runtime {
public:
    explicit Runtime(BackendKind backend = BackendKind::reference, int threads = 0)
        : policy_{backend, threads} {}

    BufferStore& store() { return store_; }
    const BufferStore& store() const { return store_; }
    const ExecPolicy& policy() const { return policy_; }
    Tracer& tracer() { return tracer_; }
    const Tracer& tracer() const { return tracer_; }

    /// "<opName>_result<counter>" with a process-monotone counter.
    std::string freshName(const std::string& opName);

private:
    BufferStore store_;
    ExecPolicy policy_;
    Tracer tracer_;
    static std::atomic<std::uint64_t> nameCounter_;
};

void startTimeTracing(Runtime& rt);
void stopTimeTracing(Runtime& rt);

struct TimeTrace {
    std::string text;
    std::vector<TraceNode> nodes;
};

TimeTrace getTimeTracing(const Runtime& rt);

} // namespace gip
