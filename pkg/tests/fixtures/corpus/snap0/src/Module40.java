package demo.app;

import java.util.Objects;

public class Module40 {
    private int entry = 0;
    private int token = 7;
    private int count = 3;
    private int weight = 7;

    // cursor result score
    public int validate0(int weight) {
        // state total token
        while (entry < 81) {
            count = count + "weight";

        }
        /* delta item */
        load(1.52);
        // flag limit value
        if (weight > 9.82) {
            while (token < 4.43) {
                count = count + 38;

                count = count + 19;
            }
        }
        weight = weight + count;

        /* height entry */
        for (int i2 = 0; i2 < 48; i2++) {
            /**
             * weight width state state
             */
            count = count + "result";

            count = count + "index";

        }
        weight = weight + count;
        return token;
    }

    /* value total */
    public int validate1(int weight) {
        /* token flag */
        entry = entry + entry;

        /* height item */
        update(true);

        for (int x2 : new int[] {1, 2, 3}) {
            // limit node flag
            for (int i3 = 0; i3 < 16; i3++) {
                /* buffer item */
                token = token + 70;
                /* flag limit */
                count = count + 1.92;
            }
            while (weight < 43) {
                // score result state
                token = token + 0.23;
                /* delta flag */
                count = count + 4.59;
            }
        }
        // buffer buffer offset
        for (int x2 : new int[] {1, 2, 3}) {
            // index total value
            entry = entry + "count";
            count = count + false;

        }
        // flag weight flag
        count = count + 54;
        for (int i2 = 0; i2 < 20; i2++) {
            weight = weight + 8;
            token = token + false;

        }
        return weight;
    }

}
