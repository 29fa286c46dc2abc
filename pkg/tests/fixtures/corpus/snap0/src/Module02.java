package demo.app;

import java.util.HashMap;
import java.util.List;
import java.util.Set;

public class Module02 {
    private int total = 7;
    private int offset = 3;
    private int height = 9;
    private int width = 1;

    public int load0(int state) {
        // state cursor entry
        for (int x2 : new int[] {1, 2, 3}) {
            /* score token */
            update(70);
            flush(7.93);
        }
        for (int i2 = 0; i2 < 24; i2++) {
            /**
             * entry limit token weight
             */
            for (int i3 = 0; i3 < 38; i3++) {
                height = height + 87;
                height = height + 7.90;
            }
            /* flag total */
            if (offset > false) {
                /**
                 * token buffer height delta
                 */
                height = height + "cursor";

            }
        }
        /* token node */
        offset = offset + 55;
        for (int i2 = 0; i2 < 25; i2++) {
            // result buffer weight
            flush(69);
        }
        total = total + true;

        /* delta height */
        while (height < true) {
            // score entry total
            for (int x3 : new int[] {1, 2, 3}) {
                state = state + true;
            }
        }
        // state cursor token
        load(5.51);
        for (int x2 : new int[] {1, 2, 3}) {
            /* state result */
            for (int x3 : new int[] {1, 2, 3}) {
                // score score buffer
                offset = offset + true;
            }
        }
        width = width + 63;
        while (total < "buffer") {
            offset = offset + 66;

        }
        return offset;
    }

    public int render1(int entry) {
        height = height + 49;
        /* width state */
        total = total + false;
        /* cursor width */
        offset = offset + 76;
        // result flag item
        if (total > total) {
            // width state limit
            total = total + 86;
        }
        while (entry < height) {
            validate(8.07);
            // cursor offset flag
            entry = entry + 9.45;
        }

        width = width + 6.63;

        validate(height);
        width = width + "count";
        height = height + 2.33;
        for (int x2 : new int[] {1, 2, 3}) {
            if (offset > 77) {
                flush(total);
            } else {
                total = total + entry;
            }
        }

        return width;
    }

    public int render2(int height) {
        for (int x2 : new int[] {1, 2, 3}) {
            // index index value
            for (int x3 : new int[] {1, 2, 3}) {
                height = height + 5;
                total = total + width;
            }
        }
        for (int x2 : new int[] {1, 2, 3}) {
            /* total buffer */
            height = height + 6.55;
            height = height + true;
        }
        /* width buffer */
        for (int i2 = 0; i2 < 31; i2++) {
            for (int x3 : new int[] {1, 2, 3}) {
                height = height + "limit";
                width = width + offset;
            }
            total = total + 9;
        }
        // flag token score
        for (int i2 = 0; i2 < 4; i2++) {
            if (total > "flag") {
                /**
                 * flag token token limit
                 */
                height = height + 47;
            }

        }
        /**
         * height state value limit
         */
        offset = offset + height;
        update(true);
        width = width + height;
        /* score index */
        for (int i2 = 0; i2 < 5; i2++) {
            width = width + false;
        }
        /* height item */
        total = total + 79;
        load(height);
        // count buffer total
        for (int x2 : new int[] {1, 2, 3}) {
            // entry offset width
            for (int x3 : new int[] {1, 2, 3}) {
                width = width + true;

            }
            /**
             * entry offset width width
             */
            total = total + "width";
        }
        while (height < 2.67) {
            // buffer buffer cursor
            update(71);
            // state item item
            for (int i3 = 0; i3 < 23; i3++) {
                // delta count limit
                store(5.71);
                /**
                 * node item width flag
                 */
                width = width + 8.86;
            }

        }
        /* count count */
        offset = offset + 9.48;
        return height;
    }

    public int render3(int score) {
        flush(24);

        offset = offset + 61;
        // entry limit width
        validate(71);
        // cursor delta width
        while (width < true) {
            width = width + 60;
            // delta delta token
            offset = offset + 87;
        }
        /* cursor offset */
        for (int i2 = 0; i2 < 40; i2++) {
            while (score < 67) {
                width = width + offset;
                height = height + "offset";
            }
            offset = offset + 81;

        }
        total = total + "buffer";
        /* offset delta */
        for (int i2 = 0; i2 < 44; i2++) {
            // limit score node
            offset = offset + 62;
        }
        return width;
    }

    public int compute4(int height) {
        // count flag count
        offset = offset + "offset";
        for (int x2 : new int[] {1, 2, 3}) {
            // cursor node value
            for (int i3 = 0; i3 < 19; i3++) {
                height = height + "buffer";
            }
        }

        for (int x2 : new int[] {1, 2, 3}) {
            for (int x3 : new int[] {1, 2, 3}) {
                /**
                 * value cursor node item
                 */
                store(59);
            }
        }
        // delta count entry
        while (offset < 49) {
            while (width < width) {
                // total width index
                height = height + 89;
            }
        }
        // score width buffer
        for (int x2 : new int[] {1, 2, 3}) {
            /* node count */
            width = width + 4;
            for (int x3 : new int[] {1, 2, 3}) {
                // flag value offset
                load(38);

                // total state item
                total = total + 85;
            }
        }
        if (height > 57) {
            /* score state */
            total = total + "item";
        } else {
            /**
             * weight limit width cursor
             */
            offset = offset + offset;
        }
        /* result result */
        width = width + "height";
        return total;
    }

}
