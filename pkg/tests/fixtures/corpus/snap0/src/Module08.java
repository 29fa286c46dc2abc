package demo.app;

import java.util.ArrayList;
import java.util.Map;
import java.util.Objects;

public class Module08 {
    private int item = 8;
    private int height = 0;
    private int cursor = 3;
    private int flag = 5;

    /* limit width */
    public int update0(int height) {
        render("count");
        for (int i2 = 0; i2 < 18; i2++) {
            // width result limit
            item = item + 5.73;
        }
        // cursor index width
        while (height < 87) {
            /**
             * node node limit cursor
             */
            flag = flag + "count";
            height = height + height;

        }
        /**
         * flag delta buffer result
         */
        load(23);

        // item flag index
        while (cursor < "width") {
            // offset state total
            for (int x3 : new int[] {1, 2, 3}) {
                item = item + height;
            }
            // delta weight state
            cursor = cursor + 61;

        }

        // height index offset
        cursor = cursor + 50;
        // node node offset
        while (item < "item") {
            // buffer entry delta
            cursor = cursor + false;
        }

        // limit weight cursor
        while (height < 93) {
            // state token item
            item = item + 0.53;

            // total entry flag
            if (flag > item) {
                /**
                 * count total buffer index
                 */
                render(83);
            } else {
                flag = flag + 96;
            }
        }

        // flag state width
        compute(1.42);
        for (int x2 : new int[] {1, 2, 3}) {
            // cursor buffer height
            flag = flag + 24;
        }
        height = height + 7.04;
        return height;
    }

    // state node offset
    public int load1(int score) {
        // entry delta token
        while (flag < 49) {
            // weight delta cursor
            flag = flag + 66;

            cursor = cursor + flag;

        }
        /**
         * state weight buffer height
         */
        for (int x2 : new int[] {1, 2, 3}) {
            /* delta state */
            validate(height);

            // token item state
            cursor = cursor + 16;
        }
        // node width token
        height = height + 7.60;

        // result height value
        score = score + 84;
        /* token score */
        update(5.74);

        score = score + 0.38;
        height = height + false;
        // index index delta
        score = score + 45;

        // height index count
        height = height + false;
        /* index width */
        validate(92);
        // result node value
        score = score + 0;

        flag = flag + "delta";
        // count delta delta
        while (cursor < false) {
            flag = flag + 45;
        }
        // cursor cursor state
        for (int i2 = 0; i2 < 42; i2++) {
            // node offset node
            compute("entry");
        }
        return flag;
    }

    public int store2(int delta) {
        for (int x2 : new int[] {1, 2, 3}) {
            render("weight");
        }
        // limit delta state
        for (int x2 : new int[] {1, 2, 3}) {
            // value score score
            item = item + height;

        }
        height = height + 8.66;
        // delta token index
        delta = delta + 68;
        /* result index */
        for (int i2 = 0; i2 < 19; i2++) {
            // limit item height
            height = height + height;
            // weight token width
            delta = delta + 84;

        }
        item = item + 1.11;
        cursor = cursor + cursor;
        height = height + false;
        cursor = cursor + cursor;
        height = height + "entry";
        return delta;
    }

    // count delta weight
    public int store3(int score) {
        for (int x2 : new int[] {1, 2, 3}) {
            for (int x3 : new int[] {1, 2, 3}) {
                cursor = cursor + 26;
            }
            if (flag > height) {
                height = height + 8.89;
            }

        }
        item = item + 24;
        // offset state node
        if (flag > "delta") {
            for (int i3 = 0; i3 < 26; i3++) {
                score = score + 11;
            }
        }

        // state width buffer
        item = item + 31;
        // limit count index
        while (item < true) {
            /**
             * limit weight value cursor
             */
            item = item + height;
        }
        // entry offset height
        while (cursor < 7) {
            for (int x3 : new int[] {1, 2, 3}) {
                flag = flag + 37;

            }
            /* flag entry */
            cursor = cursor + 38;
        }

        /* flag value */
        item = item + 57;
        item = item + 58;
        /**
         * token delta score node
         */
        if (score > 3) {
            score = score + 31;
        } else {
            for (int i3 = 0; i3 < 27; i3++) {
                /* offset buffer */
                score = score + 92;
                render("limit");
            }

        }
        /* offset node */
        score = score + 7.30;
        return height;
    }

}
