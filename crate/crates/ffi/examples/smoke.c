/* Generates and verifies the 21-letter non-injective cycle through the C API. */
#include <stdio.h>
#include <string.h>

#include "ucycle.h"

int main(void) {
    UcClass *class = NULL;
    if (uc_class_new("noninjective", 3, 3, 0, 0, NULL, 0, 0, &class) != UC_STATUS_OK) {
        fprintf(stderr, "class: %s\n", uc_last_error_message());
        return 1;
    }
    uint64_t count = 0;
    if (uc_class_count(class, &count) != UC_STATUS_OK || count != 21) {
        return 2;
    }
    UcCycle *cycle = NULL;
    if (uc_generate(class, &cycle) != UC_STATUS_OK) {
        fprintf(stderr, "generate: %s\n", uc_last_error_message());
        return 3;
    }
    bool valid = false;
    if (uc_verify(class, uc_cycle_letters(cycle), uc_cycle_len(cycle), &valid) != UC_STATUS_OK || !valid) {
        return 4;
    }
    char *text = uc_cycle_render(class, cycle);
    printf("%s\n", text);
    uc_string_free(text);
    uc_cycle_free(cycle);

    UcClass *bad = NULL;
    UcStatus status = uc_class_new("nonsense", 3, 3, 0, 0, NULL, 0, 0, &bad);
    if (status != UC_STATUS_INVALID_ARGUMENT || bad != NULL || strlen(uc_last_error_message()) == 0) {
        return 5;
    }
    uc_class_free(class);
    return 0;
}
