// Times the parallel batch kernels against their serial references on a
// seeded corpus. Checks agreement while it's at it, since the data is free.
#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <functional>

#include "polystab/batch.hpp"
#include "polystab/operators.hpp"

using namespace polystab;

namespace {

double seconds_of(const std::function<void()>& work) {
    const auto t0 = std::chrono::steady_clock::now();
    work();
    const std::chrono::duration<double> dt = std::chrono::steady_clock::now() - t0;
    return dt.count();
}

}  // namespace

int main(int argc, char** argv) {
    const unsigned members = argc > 1 ? static_cast<unsigned>(std::atoi(argv[1])) : 200;
    const auto corpus = random_corpus(1234, members, {6, 14}, 20);

    std::printf("%-28s %10s %10s %8s\n", "kernel", "serial(s)", "openmp(s)", "speedup");

    std::vector<certified_application> serial, parallel;
    const operator_spec op = lkp_op{3};
    const double cert_s = seconds_of([&] { serial = certify_corpus_serial(corpus, op); });
    const double cert_p = seconds_of([&] { parallel = certify_corpus(corpus, op); });
    bool agree = serial.size() == parallel.size();
    for (std::size_t i = 0; agree && i < serial.size(); ++i)
        agree = serial[i].certificate == parallel[i].certificate &&
                serial[i].output == parallel[i].output;
    std::printf("%-28s %10.3f %10.3f %7.2fx\n", "certify_corpus (Lkp p=3)", cert_s, cert_p,
                cert_s / cert_p);

    std::vector<polynomial> outputs;
    outputs.reserve(serial.size());
    for (const auto& item : serial) outputs.push_back(item.output);
    std::vector<bool> flags_s, flags_p;
    const double scan_s = seconds_of([&] { flags_s = scan_corpus_minors_serial(outputs, 3, 10); });
    const double scan_p = seconds_of([&] { flags_p = scan_corpus_minors(outputs, 3, 10); });
    agree = agree && flags_s == flags_p;
    std::printf("%-28s %10.3f %10.3f %7.2fx\n", "scan_corpus_minors (3x3)", scan_s, scan_p,
                scan_s / scan_p);

    if (!agree) {
        std::printf("MISMATCH between serial and parallel results\n");
        return 1;
    }
    return 0;
}
