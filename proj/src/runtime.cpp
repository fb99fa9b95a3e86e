#include "gip/runtime.hpp"

#include <chrono>
#include <cstdio>
#include <exception>

#include "gip/errors.hpp"

namespace gip {

BackendKind backendFromString(const std::string& s) {
    if (s == "reference") return BackendKind::reference;
    if (s == "parallel") return BackendKind::parallel;
    throw Error(ErrorKind::invalid_argument, "unknown backend '" + s + "'");
}

std::string to_string(BackendKind backend) {
    return backend == BackendKind::reference ? "reference" : "parallel";
}

void parallelFor(const ExecPolicy& policy, std::int64_t n,
                 const std::function<void(std::int64_t, std::int64_t)>& body) {
    int threads = policy.effectiveThreads();
    if (threads <= 1 || n < 2) {
        body(0, n);
        return;
    }
    if (static_cast<std::int64_t>(threads) > n) threads = static_cast<int>(n);

    std::vector<std::thread> workers;
    workers.reserve(static_cast<std::size_t>(threads));
    std::exception_ptr firstError = nullptr;
    std::mutex errorMutex;

    std::int64_t chunk = (n + threads - 1) / threads;
    for (int t = 0; t < threads; ++t) {
        std::int64_t begin = t * chunk;
        std::int64_t end = std::min(n, begin + chunk);
        if (begin >= end) break;
        workers.emplace_back([&, begin, end]() {
            try {
                body(begin, end);
            } catch (...) {
                std::lock_guard<std::mutex> lock(errorMutex);
                if (!firstError) firstError = std::current_exception();
            }
        });
    }
    for (auto& w : workers) w.join();
    if (firstError) std::rethrow_exception(firstError);
}

double now() {
    auto t = std::chrono::steady_clock::now().time_since_epoch();
    auto ns = std::chrono::duration_cast<std::chrono::nanoseconds>(t).count();
    return static_cast<double>(ns) / 1e6;
}

void Tracer::start() {
    roots_.clear();
    stack_.clear();
    active_ = true;
}

void Tracer::stop() { active_ = false; }

void Tracer::enter(const std::string& opName) {
    stack_.push_back(Pending{TraceNode{opName, 0.0, {}}, now()});
}

void Tracer::exit() {
    Pending done = std::move(stack_.back());
    stack_.pop_back();
    done.node.durationMs = now() - done.enteredAt;
    if (stack_.empty()) {
        roots_.push_back(std::move(done.node));
    } else {
        stack_.back().node.children.push_back(std::move(done.node));
    }
}

namespace {

void renderNode(const TraceNode& node, int depth, std::string& out) {
    std::string indent(static_cast<std::size_t>(depth) * 2, ' ');
    out += indent;
    out += "> ";
    out += node.opName;
    out += '\n';
    for (const TraceNode& child : node.children) {
        renderNode(child, depth + 1, out);
    }
    char ms[64];
    std::snprintf(ms, sizeof(ms), "%.4f", node.durationMs);
    out += indent;
    out += "< ";
    out += node.opName;
    std::size_t pad = node.opName.size() < 18 ? 18 - node.opName.size() : 1;
    out.append(pad, ' ');
    out += ms;
    out += " ms\n";
}

} // namespace

std::string Tracer::render() const {
    std::string out;
    for (const TraceNode& root : roots_) {
        renderNode(root, 0, out);
    }
    return out;
}

TraceScope::TraceScope(Tracer& tracer, const std::string& opName)
    : tracer_(tracer), recorded_(tracer.active()) {
    if (recorded_) tracer_.enter(opName);
}

TraceScope::~TraceScope() {
    if (recorded_) tracer_.exit();
}

void BufferStore::push(const std::string& name, const Image& img) {
    if (name.empty()) {
        throw Error(ErrorKind::invalid_argument, "buffer name must be non-empty");
    }
    entries_.insert_or_assign(name, img);
}

Image BufferStore::pull(const std::string& name) const {
    auto it = entries_.find(name);
    if (it == entries_.end()) {
        throw Error(ErrorKind::missing_buffer, "no buffer named '" + name + "'");
    }
    return it->second;
}

void BufferStore::clear() { entries_.clear(); }

bool BufferStore::contains(const std::string& name) const {
    return entries_.count(name) != 0;
}

void BufferStore::erase(const std::string& name) { entries_.erase(name); }

std::vector<MemoryRow> BufferStore::reportMemory() const {
    std::vector<MemoryRow> rows;
    rows.reserve(entries_.size());
    for (const auto& [name, img] : entries_) {
        rows.push_back(MemoryRow{name, img.width(), img.height(), img.depth(),
                                 4 * img.pixelCount()});
    }
    return rows;
}

void pushCurrentSlice(BufferStore& store, const std::string& name,
                      const TimeLapse& tl, int frame, int channel) {
    store.push(name, tl.plane(frame, channel));
}

std::atomic<std::uint64_t> Runtime::nameCounter_{0};

std::string Runtime::freshName(const std::string& opName) {
    std::uint64_t id = ++nameCounter_;
    return opName + "_result" + std::to_string(id);
}

void startTimeTracing(Runtime& rt) { rt.tracer().start(); }
void stopTimeTracing(Runtime& rt) { rt.tracer().stop(); }

TimeTrace getTimeTracing(const Runtime& rt) {
    return TimeTrace{rt.tracer().render(), rt.tracer().roots()};
}

} // namespace gip
