/* cc -Icrates/ffi/include crates/ffi/examples/rank.c target/debug/libcopwin_ffi.a -lpthread -ldl -lm */
#include <stdio.h>
#include "copwin.h"

int main(void) {
    const char *text = "(1,2) (2,3) (3,4) (4,5)";
    CwGraph *g = NULL;
    if (cw_graph_parse(text, &g) != CW_STATUS_OK) {
        fprintf(stderr, "%s\n", cw_last_error());
        return 1;
    }
    uint32_t alpha = 0, capt = 0;
    CwTop top;
    cw_graph_rank(g, &alpha);
    cw_top_class(g, &top);
    cw_capture_time_game(g, &capt);
    printf("rank=%u top=%d capture_time=%u\n", alpha, (int)top, capt);
    cw_graph_free(g);
    return 0;
}
