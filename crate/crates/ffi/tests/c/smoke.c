/* Exercises the C ABI end to end: parse, synthesize, compose, count,
 * render, emit, and error reporting. Prints "ok" and exits 0 on success. */
#include <stdio.h>
#include <string.h>

#include "popgraph.h"

#define CHECK(cond)                                                   \
    do {                                                              \
        if (!(cond)) {                                                \
            fprintf(stderr, "line %d: check failed: %s\n", __LINE__,  \
                    #cond);                                           \
            return 1;                                                 \
        }                                                             \
    } while (0)

static const char *SPIDER =
    "ppg 1\n"
    "edge i1 a1 v\nedge i2 a2 v\nedge o1 v z1\n"
    "order i1 i2 o1\n";

static const char *WIRES =
    "ppg 1\n"
    "edge w1 b1 y1\n"
    "order w1\n";

int main(void) {
    PpgGraph *spider = NULL, *wires = NULL, *both = NULL, *bad = NULL;
    char *text = NULL;
    uint64_t count = 0;

    CHECK(ppg_parse(SPIDER, &spider) == PPG_STATUS_OK);
    CHECK(ppg_edge_count(spider) == 3);
    CHECK(ppg_input_count(spider) == 2);
    CHECK(ppg_output_count(spider) == 1);
    CHECK(ppg_internal_vertex_count(spider) == 1);
    CHECK(ppg_has_order(spider));

    CHECK(ppg_synthesize_order(spider, &text) == PPG_STATUS_OK);
    CHECK(strcmp(text, "i1 i2 o1") == 0);
    ppg_string_free(text);

    CHECK(ppg_count_planar_orders(spider, &count) == PPG_STATUS_OK);
    CHECK(count == 2);

    CHECK(ppg_parse(WIRES, &wires) == PPG_STATUS_OK);
    CHECK(ppg_compose(spider, wires, &both) == PPG_STATUS_OK);
    CHECK(ppg_edge_count(both) == 3);
    CHECK(ppg_compose(wires, spider, &bad) == PPG_STATUS_USAGE);
    CHECK(bad == NULL);
    CHECK(ppg_last_error_message() != NULL);

    CHECK(ppg_render(both, false, false, &text) == PPG_STATUS_OK);
    CHECK(strstr(text, "<svg") != NULL);
    ppg_string_free(text);

    CHECK(ppg_emit(both, &text) == PPG_STATUS_OK);
    CHECK(strncmp(text, "ppg 1", 5) == 0);
    ppg_string_free(text);

    CHECK(ppg_parse("not a graph", &bad) == PPG_STATUS_PARSE);
    CHECK(strstr(ppg_last_error_message(), "line 1") != NULL);
    CHECK(ppg_parse(NULL, &bad) == PPG_STATUS_NULL_POINTER);

    ppg_free(both);
    ppg_free(wires);
    ppg_free(spider);
    ppg_free(NULL);
    puts("ok");
    return 0;
}
