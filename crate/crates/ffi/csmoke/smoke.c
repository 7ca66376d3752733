/* Smoke test: build a table, run the demonstration pipeline, print sizes. */
#include <stdio.h>
#include <string.h>
#include "twistcheck.h"

int main(void) {
    TcTable *table = NULL;
    if (tc_table_builtin("heisenberg:3", &table) != TC_OK) {
        fprintf(stderr, "builtin failed: %s\n", tc_last_error_message());
        return 1;
    }
    size_t classes = 0, rows = 0;
    tc_table_num_classes(table, &classes);
    tc_table_num_irreducibles(table, &rows);

    char *json = NULL;
    if (tc_demo_heisenberg(3, &json) != TC_OK) {
        fprintf(stderr, "demo failed: %s\n", tc_last_error_message());
        tc_table_free(table);
        return 1;
    }
    int all_passed = strstr(json, "\"all_passed\": true") != NULL;
    printf("version=%s classes=%zu rows=%zu all_passed=%d\n",
           tc_version(), classes, rows, all_passed);
    tc_string_free(json);

    char *report = NULL;
    TcStatus status = tc_twist_report(table, 9, 10, 3, 0, &report);
    if (status != TC_OK) {
        fprintf(stderr, "twist failed: %s\n", tc_last_error_message());
        tc_table_free(table);
        return 1;
    }
    int no_twist = strstr(report, "\"twists\": []") != NULL;
    printf("no_global_twist=%d\n", no_twist);
    tc_string_free(report);
    tc_table_free(table);
    return (classes == 11 && rows == 11 && all_passed && no_twist) ? 0 : 1;
}
