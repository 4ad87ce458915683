#pragma once

#include "plabic/error.hpp"
#include "plabic/io.hpp"
#include "plabic/network.hpp"

#include <gtest/gtest.h>

#include <random>
#include <string>
#include <utility>
#include <vector>

namespace plabic::testing {

inline QVec qv(std::initializer_list<Q> xs) { return QVec(xs); }

// (p, q) samples for the two-cycle example, p = q included.
inline std::vector<std::pair<Q, Q>> pq_samples() {
    return {{Q(1), Q(2)}, {Q(1), Q(1)}, {Q(1, 3), Q(1, 3)}, {Q(2, 5), Q(7, 3)},
            {Q(5), Q(1, 2)}, {Q(3, 4), Q(3, 4)}, {Q(9, 2), Q(11, 7)}};
}

inline Network parse_net(const std::string& text) { return io::read_network(text); }

// k = 0, n = 1: a two-edge cycle at a white vertex feeding the only sink.
inline Network cycle_feeding_sink(const Q& w) {
    std::string text = R"({"n":1,"gauge_dir":["1","2"],
 "vertices":[{"id":"b1","kind":"boundary","label":1,"x":"0","y":"0"},
             {"id":"W","kind":"internal","color":"white","x":"0","y":"2"},
             {"id":"X","kind":"internal","color":"white","x":"0","y":"4"}],
 "edges":[{"id":"a","tail":"W","head":"X","weight":")" + to_string(w) + R"(","polyline":[["0","2"],["0","4"]]},
          {"id":"b","tail":"X","head":"W","weight":"1","polyline":[["0","4"],["1","3"],["0","2"]]},
          {"id":"s","tail":"W","head":"b1","weight":"1","polyline":[["0","2"],["0","0"]]}]})";
    return parse_net(text);
}

// One edge from b2 arching over to b1.
inline Network direct_edge() {
    return parse_net(R"({"n":2,"gauge_dir":["1","2"],
 "vertices":[{"id":"b1","kind":"boundary","label":1,"x":"0","y":"0"},
             {"id":"b2","kind":"boundary","label":2,"x":"4","y":"0"}],
 "edges":[{"id":"e","tail":"b2","head":"b1","weight":"1","polyline":[["4","0"],["2","2"],["0","0"]]}]})");
}

template <class F>
ErrorKind error_kind(F&& f) {
    try {
        f();
    } catch (const Error& e) {
        return e.kind();
    }
    ADD_FAILURE() << "no plabic::Error thrown";
    return ErrorKind::Internal;
}

}  // namespace plabic::testing
