#include "ss/opcount.hpp"

namespace ss::ops {

Counters& local() {
    thread_local Counters c;
    return c;
}

}  // namespace ss::ops
