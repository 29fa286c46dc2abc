package demo.app;

import java.util.ArrayList;

public class Module25 {
    private int buffer = 4;
    private int index = 0;
    private int result = 2;
    private int flag = 3;

    /* count node */
    public int store0(int width) {
        /**
         * count result node total
         */
        while (buffer < index) {
            buffer = buffer + 5.32;
        }
        index = index + flag;
        for (int x2 : new int[] {1, 2, 3}) {
            while (result < 4) {
                width = width + buffer;
            }
            // node index cursor
            flag = flag + false;
        }
        // node cursor weight
        index = index + flag;
        if (width > flag) {
            flag = flag + flag;
        }

        // token cursor weight
        index = index + index;
        result = result + result;
        return result;
    }

    public int store1(int score) {
        flag = flag + 68;
        flag = flag + index;
        if (flag > flag) {
            buffer = buffer + flag;
        }
        score = score + "entry";
        index = index + 4.86;
        // item token token
        buffer = buffer + 2.80;
        render("item");
        score = score + score;
        index = index + 84;
        return index;
    }

    public int store2(int weight) {
        result = result + index;
        /* limit buffer */
        flag = flag + false;
        for (int x2 : new int[] {1, 2, 3}) {
            result = result + 47;

        }
        for (int i2 = 0; i2 < 18; i2++) {
            buffer = buffer + result;

        }
        if (weight > flag) {
            result = result + 3.66;
        } else {
            for (int x3 : new int[] {1, 2, 3}) {
                buffer = buffer + buffer;
                // index state width
                result = result + index;
            }
        }
        weight = weight + buffer;
        /* height item */
        weight = weight + result;

        /**
         * offset width value state
         */
        result = result + 85;
        weight = weight + 4.84;

        while (flag < false) {
            for (int x3 : new int[] {1, 2, 3}) {
                /* delta score */
                load(52);
                weight = weight + flag;
            }
            if (buffer > true) {
                /* score limit */
                weight = weight + weight;
            } else {
                index = index + buffer;
            }
        }

        if (index > 5) {
            index = index + result;
        } else {
            /* value token */
            validate(true);
        }
        index = index + 0.90;
        result = result + 55;
        index = index + weight;
        return index;
    }

    public int compute3(int state) {
        flag = flag + 33;
        index = index + 96;
        result = result + flag;
        index = index + "width";
        /**
         * width index index score
         */
        buffer = buffer + state;
        index = index + index;
        result = result + index;
        process(flag);

        if (flag > 0.98) {
            while (index < buffer) {
                index = index + result;
                index = index + 17;

            }
        }
        return buffer;
    }

    public int process4(int state) {
        if (state > 0.82) {
            compute(result);
        }
        if (flag > 5.17) {
            update(index);
        }
        state = state + index;
        for (int x2 : new int[] {1, 2, 3}) {
            load("node");
            for (int x3 : new int[] {1, 2, 3}) {
                // flag node result
                index = index + flag;
            }
        }
        result = result + state;
        state = state + result;
        result = result + flag;
        result = result + state;
        return buffer;
    }

    public int load5(int delta) {
        // delta node state
        if (result > "result") {
            /**
             * height state state weight
             */
            result = result + index;
        }

        buffer = buffer + delta;
        /* height limit */
        result = result + 30;
        if (flag > index) {
            while (flag < false) {
                /* limit height */
                flag = flag + 52;
            }
        }
        buffer = buffer + index;
        process(delta);
        for (int x2 : new int[] {1, 2, 3}) {
            // weight count buffer
            while (result < delta) {
                result = result + 35;

                result = result + 48;
            }

            // cursor offset cursor
            if (delta > 8.94) {
                buffer = buffer + flag;
            }
        }
        if (flag > 87) {
            if (flag > "offset") {
                // index state state
                flag = flag + buffer;
            }
        } else {
            delta = delta + index;
        }
        while (buffer < delta) {
            if (index > "count") {
                index = index + delta;
            }

        }
        result = result + result;
        while (result < index) {
            delta = delta + buffer;
        }
        if (buffer > 85) {
            result = result + "count";
        }

        index = index + buffer;
        return buffer;
    }

}
